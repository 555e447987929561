"""Greedy maximization of non-violated wedges under community connectivity.

Start with every edge strong. Repeatedly take the candidate edge whose
demotion removes the most violations and demote it when every community it
belongs to stays connected; either way it leaves the candidate pool. Since the
objective is monotone submodular in the weak set and the constraints are an
intersection of ``k`` bond matroids, the result is a ``1/(k+1)``
approximation, and a ``1/2`` approximation for a single community or
edge-disjoint communities.

Gains only decrease as edges are demoted, so the priority queue is a binary
heap with lazy re-validation instead of a decrease-key structure.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np

from . import connectivity
from .errors import PropertyCheckError
from .graph import CommunitySet, Graph, Labeling
from .wedges import WedgeIndex


@dataclass(frozen=True)
class Decision:
    edge: int
    gain: int
    demoted: bool


@dataclass(frozen=True)
class GreedyResult:
    labeling: Labeling
    violations: int
    tri_value: int
    demotions: tuple[Decision, ...] = ()
    blocked_count: int = 0
    post_pass_removed: int = 0
    # per-edge rank used for tie-breaking, kept so the post-pass can reuse it
    rank: tuple[int, ...] = field(default=(), repr=False)

    @property
    def T(self) -> int:
        return self.violations + self.tri_value


def edge_rank(m: int, tie_break_seed: int = 0) -> np.ndarray:
    """Priority rank per edge; lower rank wins ties. Seed 0 means edge-id order."""
    if tie_break_seed == 0:
        return np.arange(m, dtype=np.int64)
    perm = np.random.default_rng(tie_break_seed).permutation(m)
    rank = np.empty(m, dtype=np.int64)
    rank[perm] = np.arange(m)
    return rank


def greedy_max_tri(
    graph: Graph,
    communities: CommunitySet,
    tie_break_seed: int = 0,
    *,
    demote_zero_gain: bool = False,
    backend: str = "forest",
    kernel_backend=None,
    debug: bool = False,
    on_step=None,
) -> GreedyResult:
    """Run the greedy.

    Edges with zero gain are left strong unless ``demote_zero_gain`` is set,
    in which case every feasible edge is demoted in gain order as the plain
    loop would. ``on_step(index, decision)`` is called after every decision;
    ``debug`` checks that each selected gain is the maximum over candidates.
    """
    index = WedgeIndex(graph, backend=kernel_backend)
    oracle = connectivity.build(graph, communities, backend=backend)
    rank = edge_rank(graph.m, tie_break_seed)
    rank_list = rank.tolist()
    counts = index.counts
    heap = [(-int(counts[e]), rank_list[e], e) for e in range(graph.m)]
    heapq.heapify(heap)
    candidate = np.ones(graph.m, dtype=bool)
    decisions = []
    blocked = 0

    while heap:
        neg_gain, r, e = heapq.heappop(heap)
        if not candidate[e]:
            continue
        gain = int(counts[e])
        assert gain <= -neg_gain, "gains must not increase"
        if gain != -neg_gain:
            heapq.heappush(heap, (-gain, r, e))
            continue
        if gain == 0 and not demote_zero_gain:
            break
        if debug:
            live = np.flatnonzero(candidate)
            best = int(counts[live].max())
            if gain != best:
                raise PropertyCheckError(f"edge {e} has gain {gain}, maximum is {best}")
        candidate[e] = False
        demoted = oracle.try_delete(e)
        if demoted:
            got = index.demote(e)
            assert got == gain
        else:
            blocked += 1
        decision = Decision(e, gain, demoted)
        decisions.append(decision)
        if on_step is not None:
            on_step(index, decision)

    return GreedyResult(
        labeling=index.labeling(),
        violations=index.total_violations,
        tri_value=index.tri(),
        demotions=tuple(decisions),
        blocked_count=blocked,
        rank=tuple(rank_list),
    )


def minimize_strong_post_pass(
    graph: Graph,
    communities: CommunitySet,
    result: GreedyResult,
    *,
    backend: str = "forest",
    kernel_backend=None,
) -> GreedyResult:
    """Demote every strong edge not needed for connectivity.

    Edges are visited from the highest priority rank down (highest edge id
    first with the default tie-break). Demotion never adds violations.
    """
    index = WedgeIndex(graph, result.labeling, backend=kernel_backend)
    oracle = connectivity.build(graph, communities, result.labeling, backend=backend)
    rank = result.rank or tuple(range(graph.m))
    removed = 0
    for e in sorted(result.labeling.strong, key=lambda x: rank[x], reverse=True):
        if oracle.try_delete(e):
            index.demote(e)
            removed += 1
    return replace(
        result,
        labeling=index.labeling(),
        violations=index.total_violations,
        tri_value=index.tri(),
        post_pass_removed=result.post_pass_removed + removed,
    )


@dataclass(frozen=True)
class ApproximationReport:
    greedy_tri: int
    opt_tri: int
    ratio: Fraction
    k: int
    edge_disjoint: bool
    bound: Fraction


def approximation_certificate(
    graph: Graph, communities: CommunitySet, result: GreedyResult, opt_tri: int
) -> ApproximationReport:
    """Compare the greedy value against a known optimum.

    The guaranteed bound is ``1/(k+1)``, improved to ``1/2`` for a single
    community or pairwise edge-disjoint communities. Raises
    :class:`PropertyCheckError` if the ratio falls below it.
    """
    k = communities.k
    disjoint = communities.is_edge_disjoint(graph)
    bound = Fraction(1, 2) if (k <= 1 or disjoint) else Fraction(1, k + 1)
    if k == 0:
        bound = Fraction(1)
    ratio = Fraction(1) if opt_tri == 0 else Fraction(result.tri_value, opt_tri)
    report = ApproximationReport(result.tri_value, opt_tri, ratio, k, disjoint, bound)
    if ratio < bound:
        raise PropertyCheckError(
            f"greedy ratio {ratio} below guaranteed {bound} (k={k}, disjoint={disjoint})"
        )
    return report
