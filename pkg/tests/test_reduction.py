import random

import pytest

from oracles import brute_viol, feasible
from strongtie.errors import ContractViolation
from strongtie.generators import gnm
from strongtie.graph import Graph, Labeling, load_graph
from strongtie.oracle import clique_partitions, exact_solve, has_clique_cover, is_clique
from strongtie.reduction import build_gadget, cover_to_labeling, labeling_to_cover


def test_single_isolated_vertex():
    gd = build_gadget(Graph(1, []), 1)
    assert (gd.H.n, gd.H.m) == (3, 3)
    assert not gd.singleton_added
    lab = cover_to_labeling(gd, [{0}])
    assert lab.strong == {gd.H.edge_id(gd.u(0), gd.v(0)), gd.H.edge_id(gd.v(0), gd.x(0))}
    assert brute_viol(gd.H, lab.strong) == 0


def test_edge_count_formula_examples():
    gd = build_gadget(Graph(2, []), 1)
    assert (gd.H.n, gd.H.m) == (5, 6)
    gd = build_gadget(Graph(3, [(0, 1)]), 2)
    assert (gd.H.n, gd.H.m) == (8, 17)


def test_singleton_added():
    gd = build_gadget(load_graph("a b\nb c\nc a"), 1)
    assert gd.singleton_added and gd.k == 2 and gd.base.n == 4
    assert gd.H.m == gd.expected_edge_count()


def test_bad_k():
    with pytest.raises(ValueError):
        build_gadget(Graph(1, []), 0)


def test_structure():
    g = Graph(3, [(0, 1)])
    gd = build_gadget(g, 2)
    H = gd.H
    for i in range(g.n):
        assert H.has_edge(gd.u(i), gd.v(i))
        for j in range(gd.k):
            assert H.has_edge(gd.v(i), gd.x(j)) and H.has_edge(gd.u(i), gd.x(j))
    assert is_clique(H, [gd.x(j) for j in range(gd.k)])
    assert H.has_edge(gd.v(0), gd.v(1)) and not H.has_edge(gd.v(0), gd.v(2))


@pytest.mark.parametrize("text,k,cover", [
    ("a b\nc c", 2, [{0, 1}, {2}]),
    ("a b\nb c\nc a\nd d", 2, [{0, 1, 2}, {3}]),
])
def test_cover_to_labeling(text, k, cover):
    g = load_graph(text)
    gd = build_gadget(g, k)
    lab = cover_to_labeling(gd, cover)
    assert brute_viol(gd.H, lab.strong) == 0
    assert feasible(gd.H, gd.community, lab.strong)
    back = labeling_to_cover(gd, lab)
    assert sorted(map(sorted, back)) == sorted(map(sorted, cover))


def test_invalid_cover_rejected():
    g = load_graph("a b\nc c")
    gd = build_gadget(g, 2)
    with pytest.raises(ContractViolation):
        cover_to_labeling(gd, [{0, 2}, {1}])
    with pytest.raises(ContractViolation):
        cover_to_labeling(gd, [{0}, {1}, {2}])


def test_labeling_with_violations_rejected():
    gd = build_gadget(load_graph("a b\nc c"), 2)
    with pytest.raises(ContractViolation):
        labeling_to_cover(gd, Labeling.all_strong(gd.H))


@pytest.mark.parametrize("seed", range(25))
def test_round_trip_random(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    g = gnm(n, rng.randint(0, n * (n - 1) // 2), rng)
    k = rng.randint(1, 3)
    gd = build_gadget(g, k)
    assert gd.H.m == gd.expected_edge_count()
    covers = list(clique_partitions(gd.base, gd.k))
    if not covers:
        return
    lab = cover_to_labeling(gd, rng.choice(covers))
    assert brute_viol(gd.H, lab.strong) == 0
    parts = labeling_to_cover(gd, lab)
    assert set().union(*parts) == set(range(gd.base.n))
    assert all(is_clique(gd.base, p) for p in parts) and len(parts) <= gd.k
    # any zero-violation optimum from the solver also decodes
    sol = exact_solve(gd.H, gd.community, cap_m=200, count_optima=False)
    assert sol.opt_viol == 0
    assert len(labeling_to_cover(gd, sol.labeling)) <= gd.k


def test_c5_needs_more_than_two_cliques():
    g = load_graph("a b\nb c\nc d\nd e\ne a\nf f")
    g = Graph(6, g.edges)
    gd = build_gadget(g, 2)
    assert not has_clique_cover(gd.base, gd.k)
    assert exact_solve(gd.H, gd.community, cap_m=200, count_optima=False).opt_viol > 0


def test_k3_with_singleton():
    gd = build_gadget(load_graph("a b\nb c\nc a"), 1)
    assert gd.singleton_added and gd.k == 2
    assert exact_solve(gd.H, gd.community, cap_m=200, count_optima=False).opt_viol == 0
