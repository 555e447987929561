"""Decremental per-community connectivity under strong-edge deletions.

Deleting a strong edge is allowed only if every community whose induced edge
set contains it stays connected. The weak sets allowed this way form the
intersection of one bond matroid per community.

Two backends share one interface:

``NaiveOracle``
    Answers each query with a BFS between the edge's endpoints inside every
    affected community. O(|E(C)|) per query and community.
``ForestOracle``
    Keeps a spanning tree per community. Deleting a non-tree edge is O(1);
    for a tree edge, the smaller side of the cut is explored and its non-tree
    edges are scanned for a replacement. This does not reach the
    polylogarithmic amortized bound of fully dynamic structures, but in the
    greedy most deletions hit non-tree edges.
"""

from __future__ import annotations

from collections import deque

from .errors import ContractViolation, InfeasibleCommunityError
from .graph import CommunitySet, Graph, Labeling


class ConnectivityOracle:
    def __init__(self, graph: Graph, communities: CommunitySet, labeling: Labeling | None = None):
        self.graph = graph
        self.communities = communities
        self.membership = communities.edge_membership(graph)
        labeling = labeling if labeling is not None else Labeling.all_strong(graph)
        self.strong = set(labeling.strong)
        self._build()

    def _build(self):
        raise NotImplementedError

    def _community_edges(self, i):
        return [e for e in self.communities.induced_edges(self.graph, i) if e in self.strong]

    def _require_strong(self, e):
        if e not in self.strong:
            raise ContractViolation(f"edge {e} is not strong")

    def is_deletion_feasible(self, e: int) -> bool:
        self._require_strong(e)
        return all(self._feasible_in(i, e) for i in self.membership[e])

    def delete(self, e: int) -> None:
        if not self.is_deletion_feasible(e):
            raise ContractViolation(f"deleting edge {e} disconnects a community")
        for i in self.membership[e]:
            self._delete_in(i, e)
        self.strong.discard(e)

    def try_delete(self, e: int) -> bool:
        """Delete ``e`` if feasible; report whether it was deleted."""
        if not self.is_deletion_feasible(e):
            return False
        for i in self.membership[e]:
            self._delete_in(i, e)
        self.strong.discard(e)
        return True


class NaiveOracle(ConnectivityOracle):
    backend = "naive"

    def _build(self):
        self.adj = []
        for i, comm in enumerate(self.communities):
            adj = {v: {} for v in comm}
            for e in self._community_edges(i):
                u, v = self.graph.edges[e]
                adj[u][e] = v
                adj[v][e] = u
            if _count_components(adj) > 1:
                raise InfeasibleCommunityError(i)
            self.adj.append(adj)

    def _feasible_in(self, i, e):
        adj = self.adj[i]
        u, v = self.graph.edges[e]
        seen = {u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for f, y in adj[x].items():
                if f == e or y in seen:
                    continue
                if y == v:
                    return True
                seen.add(y)
                queue.append(y)
        return False

    def _delete_in(self, i, e):
        u, v = self.graph.edges[e]
        del self.adj[i][u][e]
        del self.adj[i][v][e]


def _count_components(adj):
    seen = set()
    count = 0
    for s in adj:
        if s in seen:
            continue
        count += 1
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x].values():
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


class ForestOracle(ConnectivityOracle):
    backend = "forest"

    def _build(self):
        self.tree = []  # per community: vertex -> {edge id: other endpoint}
        self.nontree = []
        self._replacement = {}
        for i, comm in enumerate(self.communities):
            tree = {v: {} for v in comm}
            nontree = {v: {} for v in comm}
            dsu_parent = {v: v for v in comm}

            def find(x):
                while dsu_parent[x] != x:
                    dsu_parent[x] = dsu_parent[dsu_parent[x]]
                    x = dsu_parent[x]
                return x

            pieces = len(comm)
            for e in self._community_edges(i):
                u, v = self.graph.edges[e]
                ru, rv = find(u), find(v)
                target = nontree
                if ru != rv:
                    dsu_parent[ru] = rv
                    pieces -= 1
                    target = tree
                target[u][e] = v
                target[v][e] = u
            if pieces > 1:
                raise InfeasibleCommunityError(i)
            self.tree.append(tree)
            self.nontree.append(nontree)

    def _find_replacement(self, i, e):
        """A non-tree edge reconnecting the two sides of tree edge ``e``, or None."""
        key = (i, e)
        if key in self._replacement:
            return self._replacement[key]
        tree = self.tree[i]
        u, v = self.graph.edges[e]
        # grow both sides in lockstep; the first to finish is the smaller one
        sides = [({u}, deque([u])), ({v}, deque([v]))]
        small = None
        while small is None:
            for seen, queue in sides:
                if not queue:
                    small = seen
                    break
                x = queue.popleft()
                for f, y in tree[x].items():
                    if f != e and y not in seen:
                        seen.add(y)
                        queue.append(y)
        found = None
        nontree = self.nontree[i]
        for x in small:
            for f, y in nontree[x].items():
                if y not in small:
                    found = f if found is None else min(found, f)
        self._replacement[key] = found
        return found

    def _feasible_in(self, i, e):
        u, _ = self.graph.edges[e]
        if e in self.nontree[i][u]:
            return True
        return self._find_replacement(i, e) is not None

    def _delete_in(self, i, e):
        u, v = self.graph.edges[e]
        if e in self.nontree[i][u]:
            del self.nontree[i][u][e]
            del self.nontree[i][v][e]
            return
        f = self._find_replacement(i, e)
        del self.tree[i][u][e]
        del self.tree[i][v][e]
        a, b = self.graph.edges[f]
        del self.nontree[i][a][f]
        del self.nontree[i][b][f]
        self.tree[i][a][f] = b
        self.tree[i][b][f] = a
        self._replacement.clear()

    def delete(self, e: int) -> None:
        super().delete(e)
        self._replacement.clear()

    def try_delete(self, e: int) -> bool:
        done = super().try_delete(e)
        if done:
            self._replacement.clear()
        return done


BACKENDS = {"naive": NaiveOracle, "forest": ForestOracle}


def build(
    graph: Graph,
    communities: CommunitySet,
    labeling: Labeling | None = None,
    backend: str = "forest",
) -> ConnectivityOracle:
    """Connectivity oracle for ``communities`` under the strong edges of ``labeling``.

    Raises :class:`InfeasibleCommunityError` naming the first community that
    the labeling leaves disconnected.
    """
    try:
        cls = BACKENDS[backend]
    except KeyError:
        raise ValueError(f"unknown connectivity backend {backend!r}") from None
    return cls(graph, communities, labeling)
