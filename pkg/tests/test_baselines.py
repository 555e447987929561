import random
from itertools import combinations

import pytest

from oracles import brute_viol, feasible
from strongtie.baselines import (
    WedgeGraph,
    angluin_selection,
    baseline_angluin,
    baseline_sintos,
    minimum_cover,
)
from strongtie.errors import SizeCapError
from strongtie.generators import gnp, random_instance
from strongtie.graph import CommunitySet, load_graph


def brute_min_cover(wg):
    active = sorted({x for link in wg.links for x in link})
    for size in range(len(active) + 1):
        for cand in combinations(active, size):
            if wg.is_cover(set(cand)):
                return size
    return 0


def test_wedge_graph_links(star3, kernel_backend):
    wg = WedgeGraph.from_graph(star3)
    assert wg.links == ((0, 1), (0, 2), (1, 2))


@pytest.mark.parametrize("mode", ["exact", "matching"])
def test_sintos_path(path3, mode):
    lab = baseline_sintos(path3, mode)
    assert brute_viol(path3, lab.strong) == 0
    if mode == "exact":
        assert len(lab.weak) == 1 and len(lab.strong) == 1


def test_sintos_triangle(triangle):
    assert baseline_sintos(triangle, "exact").strong == {0, 1, 2}
    assert baseline_sintos(triangle, "matching").strong == {0, 1, 2}


def test_sintos_star_exact(star3):
    lab = baseline_sintos(star3, "exact")
    assert len(lab.weak) == 2 and len(lab.strong) == 1
    assert brute_min_cover(WedgeGraph.from_graph(star3)) == 2


def test_sintos_exact_refuses_large():
    g = gnp(40, 0.5, random.Random(0))
    with pytest.raises(SizeCapError):
        baseline_sintos(g, "exact")


@pytest.mark.parametrize("seed", range(40))
def test_sintos_guarantees(seed):
    rng = random.Random(seed)
    g = gnp(rng.randint(2, 9), rng.random(), rng)
    wg = WedgeGraph.from_graph(g)
    exact = baseline_sintos(g, "exact")
    match = baseline_sintos(g, "matching")
    assert brute_viol(g, exact.strong) == 0 and brute_viol(g, match.strong) == 0
    best = brute_min_cover(wg)
    assert len(minimum_cover(wg)) == best
    assert len(exact.weak) == best
    assert len(match.weak) <= 2 * best


def test_angluin_examples(path3, triangle):
    assert baseline_angluin(path3, CommunitySet.from_sets(path3, [{0, 1, 2}])).strong == {0, 1}
    assert len(baseline_angluin(triangle, CommunitySet.from_sets(triangle, [{0, 1, 2}])).strong) == 2


def test_angluin_prefers_shared_edge():
    # communities {p,a,b,q} and {r,a,b,s} share only edge a-b, listed last
    g = load_graph("p a\nb q\nr a\nb s\na b")
    cs = CommunitySet.from_sets(
        g, [{g.vertex_id(t) for t in "pabq"}, {g.vertex_id(t) for t in "rabs"}]
    )
    order = angluin_selection(g, cs)
    assert order[0] == g.edge_id(g.vertex_id("a"), g.vertex_id("b"))


@pytest.mark.parametrize("seed", range(40))
def test_angluin_feasible_and_minimal(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 9)
    g, cs = random_instance(rng, n, rng.randint(n - 1, n * (n - 1) // 2), rng.randint(1, 3))
    lab = baseline_angluin(g, cs)
    assert feasible(g, cs, lab.strong)
    for e in lab.strong:
        assert not feasible(g, cs, lab.strong - {e})
