import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_viol
from strongtie.errors import ContractViolation
from strongtie.generators import gnp
from strongtie.graph import Graph, Labeling
from strongtie.wedges import (
    WedgeIndex,
    demote_edge,
    enumerate_wedges,
    marginal_violations,
    open_triangle_count,
    tri,
    viol,
)


def test_triangle_has_no_wedges(triangle, kernel_backend):
    assert enumerate_wedges(triangle, backend=kernel_backend).T == 0


def test_path_wedge(path3, kernel_backend):
    idx = enumerate_wedges(path3, backend=kernel_backend)
    assert idx.T == 1
    (w,) = idx.wedges
    assert w.center == 1 and w.tips == (0, 2)
    assert idx.total_violations == 1


def test_star_wedges(star3, kernel_backend):
    idx = enumerate_wedges(star3, backend=kernel_backend)
    assert idx.T == 3
    assert idx.counts.tolist() == [2, 2, 2]


def test_viol_and_tri(path3, star3):
    assert viol(Labeling({0, 1}, 2), path3) == 1
    assert viol(Labeling(set(), 2), path3) == 0
    assert viol(Labeling.all_strong(star3), star3) == 3
    assert tri(Labeling({0, 1}, 2), path3) == 0
    assert tri(Labeling({0}, 2), path3) == 1
    assert tri(Labeling(set(), 3), star3) == 3


def test_marginal_examples(path3, triangle):
    assert marginal_violations(path3, Labeling({0}, 2), 1) == 1
    assert marginal_violations(triangle, Labeling({0, 1}, 3), 2) == 0
    with pytest.raises(ContractViolation):
        marginal_violations(path3, Labeling({0, 1}, 2), 1)


def test_demote_examples(path3, star3, kernel_backend):
    idx = WedgeIndex(path3, backend=kernel_backend)
    assert demote_edge(idx, 0) == 1
    assert idx.total_violations == 0
    with pytest.raises(ContractViolation):
        demote_edge(idx, 0)
    idx = WedgeIndex(star3, backend=kernel_backend)
    assert demote_edge(idx, 1) == 2
    assert idx.total_violations == 1


def test_wedge_order_and_uniqueness(kernel_backend):
    g = gnp(12, 0.4, random.Random(3))
    idx = WedgeIndex(g, backend=kernel_backend)
    keys = list(zip(idx.center.tolist(), idx.tip_lo.tolist(), idx.tip_hi.tolist()))
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    for c, a, b in keys:
        assert a < b and g.has_edge(c, a) and g.has_edge(c, b) and not g.has_edge(a, b)
    assert idx.T == brute_viol(g, range(g.m))


def test_backends_agree():
    pytest.importorskip("strongtie._ckernels")
    g = gnp(60, 0.15, random.Random(7))
    a, b = WedgeIndex(g, backend="python"), WedgeIndex(g, backend="compiled")
    for x, y in zip((a.center, a.e_lo, a.e_hi), (b.center, b.e_lo, b.e_hi)):
        assert np.array_equal(x, y)
    rng = random.Random(0)
    for e in rng.sample(range(g.m), g.m // 2):
        assert a.demote(e) == b.demote(e)
    assert np.array_equal(a.counts, b.counts)


@st.composite
def graph_and_subset(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [p for p in pairs if draw(st.booleans())]
    g = Graph(n, edges)
    strong = {e for e in range(g.m) if draw(st.booleans())}
    return g, strong


@settings(max_examples=200)
@given(graph_and_subset())
def test_viol_matches_brute_force(gs):
    g, strong = gs
    assert viol(Labeling(strong, g.m), g) == brute_viol(g, strong)
    assert viol(Labeling.all_strong(g), g) == open_triangle_count(g)
    assert viol(Labeling.all_weak(g), g) == 0


@settings(max_examples=200)
@given(graph_and_subset())
def test_marginal_matches_recount(gs):
    g, strong = gs
    for e in set(range(g.m)) - strong:
        lab = Labeling(strong, g.m)
        diff = brute_viol(g, strong | {e}) - brute_viol(g, strong)
        assert marginal_violations(g, lab, e) == diff


@settings(max_examples=100)
@given(graph_and_subset(), st.randoms(use_true_random=False))
def test_demotion_counters_match_recount(gs, rnd):
    g, _ = gs
    for backend in ("python", "compiled"):
        try:
            idx = WedgeIndex(g, backend=backend)
        except ImportError:
            continue
        order = list(range(g.m))
        rnd.shuffle(order)
        strong = set(range(g.m))
        for e in order:
            before = idx.counts[e]
            gain = idx.demote(e)
            strong.discard(e)
            assert gain == before
            assert idx.total_violations == brute_viol(g, strong)
            for f in range(g.m):
                expected = sum(
                    1 for w in idx.per_edge_wedges(f).tolist()
                    if idx.strong[idx.e_lo[w]] and idx.strong[idx.e_hi[w]]
                )
                assert idx.counts[f] == expected
            assert 2 * idx.total_violations == int(idx.counts.sum())


@settings(max_examples=100)
@given(graph_and_subset())
def test_reset_from_labeling(gs):
    g, strong = gs
    idx = WedgeIndex(g, Labeling(strong, g.m))
    assert idx.total_violations == brute_viol(g, strong)
    assert idx.labeling() == Labeling(strong, g.m)
