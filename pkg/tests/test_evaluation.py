import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strongtie.baselines import baseline_sintos
from strongtie.evaluation import (
    edge_classes,
    label_stats,
    pr_report,
    report_document,
    split_communities,
    to_json,
    to_key_value,
)
from strongtie.generators import gnp, random_community
from strongtie.graph import CommunitySet, Graph, Labeling, load_graph


def test_label_stats_path(path3):
    cs = CommunitySet.from_sets(path3, [{0, 1, 2}])
    st_ = label_stats(path3, cs, Labeling.all_strong(path3))
    assert (st_.b, st_.s, st_.c) == (1, 1, 1)
    st_ = label_stats(path3, cs, Labeling.all_weak(path3))
    assert (st_.b, st_.s, st_.c) == (0, 0, 3)


def test_label_stats_no_wedges(triangle):
    assert label_stats(triangle, CommunitySet(()), Labeling.all_strong(triangle)).b == 0


@pytest.mark.parametrize("seed", range(10))
def test_sintos_b_zero(seed):
    g = gnp(12, 0.3, random.Random(seed))
    assert label_stats(g, CommunitySet(()), baseline_sintos(g)).b == 0


def test_split_sizes():
    g = Graph(10, [])
    for k, test_size in ((4, 2), (5, 2), (2, 1)):
        cs = CommunitySet(tuple(frozenset({i}) for i in range(k)))
        train, test = split_communities(cs, seed=3)
        assert (test.k, train.k) == (test_size, k - test_size)
        assert set(train) | set(test) == set(cs) and not set(train) & set(test)
        assert split_communities(cs, seed=3) == (train, test)
    with pytest.raises(ValueError):
        split_communities(CommunitySet((frozenset({0}),)), 0)


def test_pr_all_inter_weak():
    g = load_graph("a b\nc d")
    test = CommunitySet((frozenset({0, 2}), frozenset({1, 3})))
    rep = pr_report(g, test, Labeling.all_weak(g))
    assert rep.P_W == rep.R_W == 1
    assert rep.P_S is None and rep.R_S is None


def test_pr_exact_match():
    # two disjoint K2 test communities joined by a bridge
    g = load_graph("a b\nc d\nb c")
    test = CommunitySet((frozenset({0, 1}), frozenset({2, 3})))
    intra, inter = edge_classes(g, test)
    assert intra == {0, 1} and inter == {2}
    rep = pr_report(g, test, Labeling({0, 1}, 3))
    assert (rep.P_W, rep.R_W, rep.P_S, rep.R_S) == (1, 1, 1, 1)


def test_overlap_is_intra_not_inter():
    g = load_graph("a b")
    test = CommunitySet((frozenset({0, 1}), frozenset({1})))
    assert edge_classes(g, test) == ({0}, set())


def test_untouched_edges_in_denominators():
    g = load_graph("a b\nb c\nx y")
    test = CommunitySet((frozenset({0}), frozenset({1, 2})))
    lab = Labeling({1, 2}, 3)
    rep = pr_report(g, test, lab)
    assert rep.P_S == Fraction(1, 2)
    assert pr_report(g, test, lab, touched_only=True).P_S == 1


@given(st.integers(0, 10_000))
def test_pr_invariants(seed):
    rng = random.Random(seed)
    g = gnp(rng.randint(2, 10), rng.random(), rng)
    test = CommunitySet(tuple(random_community(g, rng.randint(1, g.n), rng) for _ in range(3)))
    lab = Labeling({e for e in range(g.m) if rng.random() < 0.5}, g.m)
    rep = pr_report(g, test, lab)
    assert rep.weak_inter <= min(rep.weak, rep.inter)
    assert rep.strong_intra <= min(rep.strong, rep.intra)
    if rep.P_W is not None:
        assert rep.P_W * rep.weak == rep.weak_inter
    if rep.R_S is not None:
        assert rep.R_S * rep.intra == rep.strong_intra
    # relabel vertices by a permutation
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    test2 = CommunitySet(tuple(frozenset(perm[v] for v in c) for c in test))
    assert pr_report(h, test2, lab) == rep


def test_report_serialization():
    g = load_graph("a b\nb c")
    cs = CommunitySet.from_sets(g, [{0, 1, 2}])
    lab = Labeling({0, 1}, 2)
    doc = report_document(label_stats(g, cs, lab), pr_report(g, cs, lab))
    kv = to_key_value(doc)
    assert "b=1.000000\n" in kv and "P_W=undefined\n" in kv and "sizes.edges=2\n" in kv
    assert to_json(doc) == to_json(dict(reversed(list(doc.items()))))
