"""Open-triangle (wedge) enumeration and STC violation counting.

A wedge is a path ``u - v - w`` with ``(u, w)`` missing from the graph. It is
violated when both of its edges are strong. :class:`WedgeIndex` keeps, for
every edge, the number of violated wedges it sits in, so that demoting an edge
to weak costs time proportional to the wedges through it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ContractViolation
from .graph import Graph, Labeling


@dataclass(frozen=True)
class Wedge:
    center: int
    tips: tuple[int, int]
    edge_ids: tuple[int, int]


class WedgeIndex:
    """All wedges of a graph plus per-edge violated-wedge counters.

    Wedges are ordered by ``(center, min tip, max tip)``. ``counts[e]`` is the
    number of wedges containing ``e`` whose two edges are both strong; it is
    zero for weak edges. The total violation count is half the counter sum.
    """

    def __init__(self, graph: Graph, labeling: Labeling | None = None, backend=None):
        self.graph = graph
        self.kernels = _kernels.get(backend)
        (self.center, self.tip_lo, self.tip_hi, self.e_lo, self.e_hi) = (
            self.kernels.enumerate_wedges(graph.indptr, graph.indices, graph.adj_eid)
        )
        self.T = len(self.center)
        m = graph.m
        ends = np.concatenate([self.e_lo, self.e_hi])
        wids = np.concatenate([np.arange(self.T), np.arange(self.T)]).astype(np.int64)
        order = np.argsort(ends, kind="stable")
        self.edge_wids = np.ascontiguousarray(wids[order])
        self.edge_ptr = np.zeros(m + 1, dtype=np.int64)
        np.cumsum(np.bincount(ends, minlength=m), out=self.edge_ptr[1:])
        self.reset(labeling if labeling is not None else Labeling.all_strong(graph))

    def reset(self, labeling: Labeling) -> None:
        self.strong = labeling.mask()
        both = (self.strong[self.e_lo] & self.strong[self.e_hi]).astype(bool)
        m = self.graph.m
        self.counts = (
            np.bincount(self.e_lo[both], minlength=m) + np.bincount(self.e_hi[both], minlength=m)
        ).astype(np.int64)
        self.total_violations = int(both.sum())

    @property
    def violated_count_per_edge(self) -> np.ndarray:
        return self.counts

    @property
    def wedges(self) -> list[Wedge]:
        return [
            Wedge(c, (a, b), (x, y))
            for c, a, b, x, y in zip(
                self.center.tolist(), self.tip_lo.tolist(), self.tip_hi.tolist(),
                self.e_lo.tolist(), self.e_hi.tolist(),
            )
        ]

    def per_edge_wedges(self, e: int) -> np.ndarray:
        return self.edge_wids[self.edge_ptr[e] : self.edge_ptr[e + 1]]

    def wedge_count(self, e: int) -> int:
        return int(self.edge_ptr[e + 1] - self.edge_ptr[e])

    def is_strong(self, e: int) -> bool:
        return bool(self.strong[e])

    def labeling(self) -> Labeling:
        return Labeling(frozenset(np.flatnonzero(self.strong).tolist()), self.graph.m)

    def tri(self) -> int:
        return self.T - self.total_violations

    def gain(self, e: int) -> int:
        """tri(S \\ {e}) - tri(S) for a strong edge ``e``."""
        return int(self.counts[e])

    def demote(self, e: int) -> int:
        if not self.strong[e]:
            raise ContractViolation(f"edge {e} is already weak")
        gain = self.kernels.demote(
            e, self.strong, self.counts, self.edge_ptr, self.edge_wids, self.e_lo, self.e_hi
        )
        self.total_violations -= gain
        return gain

    def recount(self) -> int:
        return int(self.kernels.count_violations(self.strong, self.e_lo, self.e_hi))


def enumerate_wedges(graph: Graph, backend=None) -> WedgeIndex:
    """Index every open triangle of ``graph``, with all edges strong."""
    return WedgeIndex(graph, backend=backend)


def demote_edge(index: WedgeIndex, e: int) -> int:
    """Make strong edge ``e`` weak; return the gain in non-violated wedges."""
    return index.demote(e)


def _strong_neighbors(graph: Graph, strong, v: int) -> list[int]:
    lo, hi = graph.indptr[v], graph.indptr[v + 1]
    return [
        w
        for w, e in zip(graph.indices[lo:hi].tolist(), graph.adj_eid[lo:hi].tolist())
        if e in strong
    ]


def viol(labeling: Labeling, graph: Graph) -> int:
    """Stateless violation count: pairs of strong neighbors that are not adjacent."""
    strong = labeling.strong
    adj = graph.adjacency_sets
    total = 0
    for v in range(graph.n):
        nb = _strong_neighbors(graph, strong, v)
        for i, a in enumerate(nb):
            adj_a = adj[a]
            for b in nb[i + 1 :]:
                if b not in adj_a:
                    total += 1
    return total


def open_triangle_count(graph: Graph) -> int:
    return viol(Labeling.all_strong(graph), graph)


def tri(labeling: Labeling, graph: Graph) -> int:
    return open_triangle_count(graph) - viol(labeling, graph)


def marginal_violations(index: WedgeIndex | Graph, labeling: Labeling, e: int) -> int:
    """Violations added by making weak edge ``e = (u, v)`` strong.

    Counted as strong neighbors of ``u`` not adjacent to ``v`` plus strong
    neighbors of ``v`` not adjacent to ``u``.
    """
    graph = index.graph if isinstance(index, WedgeIndex) else index
    if e in labeling.strong:
        raise ContractViolation(f"edge {e} is already strong")
    u, v = graph.edges[e]
    adj = graph.adjacency_sets
    return sum(
        1 for w in _strong_neighbors(graph, labeling.strong, u) if w != v and w not in adj[v]
    ) + sum(
        1 for w in _strong_neighbors(graph, labeling.strong, v) if w != u and w not in adj[u]
    )
