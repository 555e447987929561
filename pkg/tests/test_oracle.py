import random

import networkx as nx
import pytest

from oracles import brute_viol, feasible
from strongtie.errors import SizeCapError
from strongtie.generators import connected_gnm, gnp, random_community
from strongtie.graph import CommunitySet, Graph, load_graph
from strongtie.oracle import (
    brute_force_solve,
    check_direct_sum,
    check_matroid,
    check_monotonicity,
    check_supermodularity,
    exact_solve,
    matroid_violation,
)


def whole(g):
    return CommunitySet.from_sets(g, [range(g.n)])


def test_exact_examples(path3, triangle):
    assert exact_solve(path3, whole(path3)).opt_viol == 1
    assert exact_solve(triangle, whole(triangle)).opt_viol == 0


def test_exact_c5():
    g = load_graph("a b\nb c\nc d\nd e\ne a")
    sol = exact_solve(g, whole(g))
    ref = brute_force_solve(g, whole(g))
    assert (sol.opt_viol, sol.optima_count) == (ref.opt_viol, ref.optima_count) == (3, 5)
    assert sol.labeling == ref.labeling


def test_exact_refuses_over_cap():
    g = gnp(10, 0.6, random.Random(1))
    with pytest.raises(SizeCapError):
        exact_solve(g, CommunitySet(()), cap_m=g.m - 1)


def _atlas_small():
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() <= 6 and G.number_of_edges() <= 10:
            yield G


ATLAS = list(_atlas_small())


@pytest.mark.parametrize("idx", range(len(ATLAS)))
def test_exact_matches_brute_force_atlas(idx):
    G = ATLAS[idx]
    g = Graph(G.number_of_nodes(), sorted(G.edges()))
    rng = random.Random(idx)
    comm_sets = [[max(nx.connected_components(G), key=len)]]
    comm_sets.append([random_community(g, rng.randint(1, g.n), rng) for _ in range(2)])
    for comms in comm_sets:
        cs = CommunitySet.from_sets(g, comms)
        sol = exact_solve(g, cs)
        ref = brute_force_solve(g, cs)
        assert sol.opt_viol == ref.opt_viol
        assert sol.optima_count == ref.optima_count
        assert sol.labeling == ref.labeling
        assert sol.opt_viol + sol.opt_tri == brute_viol(g, range(g.m))
        assert feasible(g, cs, sol.labeling.strong)
        fast = exact_solve(g, cs, count_optima=False)
        assert fast.opt_viol == ref.opt_viol and fast.optima_count is None
        assert brute_viol(g, fast.labeling.strong) == ref.opt_viol


def test_supermodularity_random():
    for seed in range(5):
        g = gnp(8, 0.45, random.Random(seed))
        assert check_supermodularity(g, 200, seed).passed
        assert check_monotonicity(g, 200, seed).passed


def test_supermodularity_degenerate(triangle):
    assert check_supermodularity(triangle, 50, 0).passed
    assert check_supermodularity(Graph(3, []), 10, 0).passed


def test_matroid_triangle(triangle):
    res = check_matroid(triangle, {0, 1, 2})
    assert res.passed
    assert res.family == {frozenset(), frozenset({0}), frozenset({1}), frozenset({2})}


def test_matroid_path(path3):
    res = check_matroid(path3, {0, 1, 2})
    assert res.passed and res.family == {frozenset()}


def test_matroid_four_cycle():
    g = load_graph("a b\nb c\nc d\nd a")
    res = check_matroid(g, range(4))
    assert res.passed
    maximal = [s for s in res.family if not any(s < t for t in res.family)]
    assert {len(s) for s in maximal} == {1} and len(maximal) == 4


def test_matroid_cap():
    g = Graph(6, [(u, v) for u in range(6) for v in range(u + 1, 6)])
    with pytest.raises(SizeCapError):
        check_matroid(g, range(6))


def test_matroid_violation_detects_non_matroid():
    # {a}, {b, c} maximal: exchange fails
    fam = {0b000, 0b001, 0b010, 0b100, 0b110}
    assert matroid_violation(fam, 3) is not None
    assert matroid_violation({0b001}, 1) is not None
    assert matroid_violation({0, 0b011}, 2) is not None


def test_direct_sum():
    g = load_graph("a b\nb c\nc a\nc d\nd e\ne f\nf d")
    cs = CommunitySet.from_sets(g, [{0, 1, 2}, {3, 4, 5}])
    assert check_direct_sum(g, cs).passed
    overlapping = CommunitySet.from_sets(g, [{0, 1, 2}, {1, 2, 3}])
    assert not check_direct_sum(g, overlapping).passed
