"""Comparison labelings that optimize one side of the problem only.

``baseline_sintos`` ignores communities: it keeps as many strong edges as it
can with zero violations. A labeling has no violations exactly when its weak
edges cover every link of the wedge graph (nodes are edges of ``G``, links are
wedges), so the weak set is a vertex cover of that graph.

``baseline_angluin`` ignores wedges: it greedily adds the edge merging the most
community components until every community is connected, then prunes edges
that turned out redundant.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from . import connectivity
from .errors import SizeCapError
from .graph import CommunitySet, DisjointSets, Graph, Labeling, check_feasible
from .wedges import WedgeIndex

EXACT_EDGE_CAP = 30
EXACT_WEDGE_NODE_CAP = 40


@dataclass(frozen=True)
class WedgeGraph:
    nodes: int
    links: tuple[tuple[int, int], ...]
    adjacency: tuple[frozenset, ...]

    @classmethod
    def from_graph(cls, graph: Graph, index: WedgeIndex | None = None) -> "WedgeGraph":
        index = index or WedgeIndex(graph)
        links = sorted(
            {(min(a, b), max(a, b)) for a, b in zip(index.e_lo.tolist(), index.e_hi.tolist())}
        )
        adj = [set() for _ in range(graph.m)]
        for a, b in links:
            adj[a].add(b)
            adj[b].add(a)
        return cls(graph.m, tuple(links), tuple(frozenset(s) for s in adj))

    def is_cover(self, nodes) -> bool:
        return all(a in nodes or b in nodes for a, b in self.links)


def matching_cover(wg: WedgeGraph) -> set[int]:
    """Both endpoints of a maximal matching built in lexicographic link order."""
    matched = set()
    for a, b in wg.links:
        if a not in matched and b not in matched:
            matched.add(a)
            matched.add(b)
    return matched


def minimum_cover(wg: WedgeGraph) -> set[int]:
    """Exact minimum vertex cover by branch and bound.

    Branches on a maximum-degree node: either it is in the cover or all of its
    neighbors are. Degree-one nodes are resolved by taking their neighbor.
    """
    best = [matching_cover(wg)]

    def solve(adj: dict[int, set[int]], chosen: set[int]):
        adj = {v: set(ns) for v, ns in adj.items() if ns}
        chosen = set(chosen)
        changed = True
        while changed:
            changed = False
            for v in sorted(adj):
                if v in adj and len(adj[v]) == 1:
                    (w,) = adj[v]
                    _take(adj, w)
                    chosen.add(w)
                    changed = True
        if len(chosen) >= len(best[0]):
            return
        if not adj:
            best[0] = chosen
            return
        # matching lower bound on the remaining graph
        used, lb = set(), 0
        for v in sorted(adj):
            if v in used:
                continue
            for w in sorted(adj[v]):
                if w not in used:
                    used.update((v, w))
                    lb += 1
                    break
        if len(chosen) + lb >= len(best[0]):
            return
        v = max(sorted(adj), key=lambda x: len(adj[x]))
        left = {x: set(ns) for x, ns in adj.items()}
        _take(left, v)
        solve(left, chosen | {v})
        right = {x: set(ns) for x, ns in adj.items()}
        nbrs = set(right[v])
        for w in nbrs:
            _take(right, w)
        solve(right, chosen | nbrs)

    solve({v: set(ns) for v, ns in enumerate(wg.adjacency)}, set())
    return best[0]


def _take(adj, v):
    for w in adj.pop(v, ()):
        if w in adj:
            adj[w].discard(v)
            if not adj[w]:
                del adj[w]


def baseline_sintos(graph: Graph, mode: str = "matching") -> Labeling:
    """Zero-violation labeling with a small weak set; communities are ignored."""
    wg = WedgeGraph.from_graph(graph)
    if mode == "matching":
        weak = matching_cover(wg)
    elif mode == "exact":
        active = sum(1 for s in wg.adjacency if s)
        if graph.m > EXACT_EDGE_CAP and active > EXACT_WEDGE_NODE_CAP:
            raise SizeCapError(
                f"exact mode needs m <= {EXACT_EDGE_CAP} or at most "
                f"{EXACT_WEDGE_NODE_CAP} wedge-graph nodes with links "
                f"(got m={graph.m}, {active})"
            )
        weak = minimum_cover(wg)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return Labeling(frozenset(range(graph.m)) - frozenset(weak), graph.m)


def connectivity_deficit(graph: Graph, communities: CommunitySet, strong) -> int:
    """Sum over communities of (strong components - 1)."""
    total = 0
    for i, comm in enumerate(communities):
        dsu = DisjointSets(comm)
        for e in communities.induced_edges(graph, i):
            if e in strong:
                dsu.union(*graph.edges[e])
        total += dsu.count - 1
    return total


def angluin_selection(graph: Graph, communities: CommunitySet) -> list[int]:
    """Edges in the order the component-merging greedy adds them (before pruning).

    Each step adds the edge joining the most pairs of distinct components,
    summed over communities, lowest edge id on ties, until every community
    is a single component.
    """
    check_feasible(graph, communities)
    membership = communities.edge_membership(graph)
    dsus = [DisjointSets(c) for c in communities]

    def gain(e):
        u, v = graph.edges[e]
        return sum(1 for i in membership[e] if dsus[i].find(u) != dsus[i].find(v))

    heap = [(-len(membership[e]), e) for e in range(graph.m) if membership[e]]
    heapq.heapify(heap)
    deficit = sum(d.count - 1 for d in dsus)
    chosen = []
    while deficit and heap:
        neg, e = heapq.heappop(heap)
        g = gain(e)
        if g == 0:
            continue
        if g != -neg:
            heapq.heappush(heap, (-g, e))
            continue
        u, v = graph.edges[e]
        for i in membership[e]:
            dsus[i].union(u, v)
        deficit -= g
        chosen.append(e)
    return chosen


def baseline_angluin(graph: Graph, communities: CommunitySet, prune: bool = True) -> Labeling:
    """Few strong edges that connect every community; wedges are ignored.

    Runs :func:`angluin_selection`, then drops, in reverse selection order,
    every chosen edge whose removal keeps all communities connected.
    """
    chosen = angluin_selection(graph, communities)
    labeling = Labeling(frozenset(chosen), graph.m)
    if not prune:
        return labeling
    oracle = connectivity.build(graph, communities, labeling)
    for e in reversed(chosen):
        oracle.try_delete(e)
    return Labeling(frozenset(oracle.strong), graph.m)
