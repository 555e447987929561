"""Graph, community and labeling containers plus their text formats.

Vertices are dense integer ids ``0..n-1``; edges get stable ids ``0..m-1`` in
input order. External string tokens are kept so that every file the package
writes can be read back with the original vertex names.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import ContractViolation, InfeasibleCommunityError, ParseError


class DisjointSets:
    """Union-find with path halving and union by size."""

    def __init__(self, items: Iterable[int]):
        self.parent = {x: x for x in items}
        self.size = {x: 1 for x in self.parent}
        self.count = len(self.parent)

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True


class Graph:
    """Immutable undirected simple graph.

    Adjacency is stored in CSR form (``indptr``, ``indices``) with each
    neighbor list sorted, and ``adj_eid`` giving the edge id of every
    adjacency slot. These arrays are what the compiled kernels consume.
    """

    def __init__(
        self,
        n: int,
        edges: Sequence[tuple[int, int]],
        names: Sequence[str] | None = None,
        dropped_duplicates: int = 0,
        dropped_self_loops: int = 0,
    ):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if names is not None and len(names) != n:
            raise ValueError("names must have one entry per vertex")
        self.n = int(n)
        self.edges = tuple((int(u), int(v)) for u, v in edges)
        self.m = len(self.edges)
        self._eid = {}
        for eid, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {eid} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"edge {eid} is a self-loop")
            key = (u, v) if u < v else (v, u)
            if key in self._eid:
                raise ValueError(f"edge {eid} duplicates edge {self._eid[key]}")
            self._eid[key] = eid

        self.names = tuple(names) if names is not None else None
        self._ids = {s: i for i, s in enumerate(self.names)} if self.names else {}
        self.dropped_duplicates = dropped_duplicates
        self.dropped_self_loops = dropped_self_loops

        deg = np.zeros(self.n, dtype=np.int64)
        if self.m:
            ends = np.asarray(self.edges, dtype=np.int64)
            np.add.at(deg, ends[:, 0], 1)
            np.add.at(deg, ends[:, 1], 1)
        self.indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(deg, out=self.indptr[1:])
        src = np.empty(2 * self.m, dtype=np.int64)
        dst = np.empty(2 * self.m, dtype=np.int64)
        eids = np.empty(2 * self.m, dtype=np.int64)
        if self.m:
            src[: self.m], src[self.m :] = ends[:, 0], ends[:, 1]
            dst[: self.m], dst[self.m :] = ends[:, 1], ends[:, 0]
            eids[: self.m] = eids[self.m :] = np.arange(self.m)
        order = np.lexsort((dst, src))
        self.indices = dst[order]
        self.adj_eid = eids[order]
        for arr in (self.indptr, self.indices, self.adj_eid):
            arr.setflags(write=False)
        self._adj_sets = None

    @classmethod
    def from_edges(cls, edges, n=None, names=None):
        edges = list(edges)
        if n is None:
            n = 1 + max((max(u, v) for u, v in edges), default=-1)
        return cls(n, edges, names)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def incident_edges(self, v: int) -> np.ndarray:
        return self.adj_eid[self.indptr[v] : self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    @property
    def adjacency_sets(self) -> list[frozenset]:
        if self._adj_sets is None:
            self._adj_sets = [
                frozenset(self.neighbors(v).tolist()) for v in range(self.n)
            ]
        return self._adj_sets

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._eid

    def edge_id(self, u: int, v: int) -> int:
        return self._eid[(u, v) if u < v else (v, u)]

    def name(self, v: int) -> str:
        return self.names[v] if self.names else str(v)

    def vertex_id(self, token: str) -> int:
        if self.names:
            return self._ids[token]
        v = int(token)
        if not 0 <= v < self.n:
            raise KeyError(token)
        return v

    def has_token(self, token: str) -> bool:
        try:
            self.vertex_id(token)
        except (KeyError, ValueError):
            return False
        return True

    def induced_edge_ids(self, vertices: Iterable[int]) -> list[int]:
        """Ids of edges with both endpoints in ``vertices``, ascending."""
        vs = vertices if isinstance(vertices, (set, frozenset)) else set(vertices)
        out = []
        for v in vs:
            lo, hi = self.indptr[v], self.indptr[v + 1]
            for w, e in zip(self.indices[lo:hi].tolist(), self.adj_eid[lo:hi].tolist()):
                if v < w and w in vs:
                    out.append(e)
        out.sort()
        return out


def _iter_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def load_graph(edge_list_text: str) -> Graph:
    """Parse a whitespace-separated edge list.

    Duplicate edges and self-loops are dropped and counted on the returned
    graph. Tokens become dense ids in order of first appearance.
    """
    ids: dict[str, int] = {}
    names: list[str] = []
    seen: set[tuple[int, int]] = set()
    edges = []
    dups = loops = 0
    for lineno, line in _iter_lines(edge_list_text):
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 vertex tokens, got {len(tokens)}", lineno)
        pair = []
        for tok in tokens:
            if tok not in ids:
                ids[tok] = len(names)
                names.append(tok)
            pair.append(ids[tok])
        u, v = pair
        if u == v:
            loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            dups += 1
            continue
        seen.add(key)
        edges.append((u, v))
    return Graph(len(names), edges, names, dups, loops)


def dump_graph(graph: Graph) -> str:
    """Edge list in edge-id order. Isolated vertices are not representable."""
    return "".join(f"{graph.name(u)} {graph.name(v)}\n" for u, v in graph.edges)


@dataclass(frozen=True)
class CommunitySet:
    communities: tuple[frozenset, ...]
    dropped: int = 0
    unknown_tokens: int = 0
    _induced: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def k(self) -> int:
        return len(self.communities)

    def __len__(self):
        return len(self.communities)

    def __iter__(self):
        return iter(self.communities)

    def __getitem__(self, i):
        return self.communities[i]

    def induced_edges(self, graph: Graph, i: int) -> list[int]:
        key = (graph, i)
        if key not in self._induced:
            self._induced[key] = graph.induced_edge_ids(self.communities[i])
        return self._induced[key]

    def edge_membership(self, graph: Graph) -> list[list[int]]:
        """For each edge id, the indices of communities whose induced edge set holds it."""
        member = [[] for _ in range(graph.m)]
        for i in range(self.k):
            for e in self.induced_edges(graph, i):
                member[e].append(i)
        return member

    def is_edge_disjoint(self, graph: Graph) -> bool:
        return all(len(c) <= 1 for c in self.edge_membership(graph))

    @classmethod
    def from_sets(cls, graph: Graph, sets: Iterable[Iterable[int]], check: bool = True):
        comms = tuple(frozenset(int(v) for v in s) for s in sets)
        for i, c in enumerate(comms):
            bad = [v for v in c if not 0 <= v < graph.n]
            if bad:
                raise ValueError(f"community {i} has vertex ids outside the graph: {bad}")
        out = cls(comms)
        if check:
            check_feasible(graph, out)
        return out


def _components(graph: Graph, vertices, edge_ids) -> DisjointSets:
    dsu = DisjointSets(vertices)
    for e in edge_ids:
        u, v = graph.edges[e]
        dsu.union(u, v)
    return dsu


def induced_strong_components(graph: Graph, labeling: "Labeling", community) -> int:
    """Number of connected components of the community under its strong edges."""
    vs = community if isinstance(community, (set, frozenset)) else set(community)
    strong = labeling.strong
    return _components(
        graph, vs, (e for e in graph.induced_edge_ids(vs) if e in strong)
    ).count


def check_feasible(graph: Graph, communities: CommunitySet, strong=None) -> None:
    """Raise if any community is disconnected under ``strong`` (default: all edges)."""
    for i in range(communities.k):
        edges = communities.induced_edges(graph, i)
        if strong is not None:
            edges = [e for e in edges if e in strong]
        if _components(graph, communities[i], edges).count > 1:
            raise InfeasibleCommunityError(i)


def _largest_component(graph: Graph, vertices: set[int]) -> set[int]:
    dsu = _components(graph, vertices, graph.induced_edge_ids(vertices))
    groups: dict[int, set[int]] = {}
    for v in vertices:
        groups.setdefault(dsu.find(v), set()).add(v)
    return max(groups.values(), key=lambda g: (len(g), -min(g)))


def load_communities(text: str, graph: Graph, restrict_to_lcc: bool = False) -> CommunitySet:
    """Parse one community per line.

    With ``restrict_to_lcc`` each community is cut down to the largest
    connected component of its induced subgraph (ties go to the component
    holding the smallest vertex id), unknown tokens are skipped, and
    communities left with fewer than two vertices are dropped.
    """
    comms = []
    lines = []
    dropped = unknown = 0
    for lineno, line in _iter_lines(text):
        members = set()
        for tok in line.split():
            if graph.has_token(tok):
                members.add(graph.vertex_id(tok))
            elif restrict_to_lcc:
                unknown += 1
            else:
                raise ParseError(f"unknown vertex token {tok!r}", lineno)
        if restrict_to_lcc:
            if members:
                members = _largest_component(graph, members)
            if len(members) < 2:
                dropped += 1
                continue
        comms.append(frozenset(members))
        lines.append(lineno)
    out = CommunitySet(tuple(comms), dropped, unknown)
    try:
        check_feasible(graph, out)
    except InfeasibleCommunityError as exc:
        raise InfeasibleCommunityError(
            exc.index,
            f"community {exc.index} (line {lines[exc.index]}) does not induce a connected subgraph",
        ) from None
    return out


def dump_communities(graph: Graph, communities: CommunitySet) -> str:
    return "".join(
        " ".join(graph.name(v) for v in sorted(c)) + "\n" for c in communities
    )


@dataclass(frozen=True)
class Labeling:
    """Strong edge ids; every other edge of the graph is weak."""

    strong: frozenset
    m: int

    def __post_init__(self):
        if not isinstance(self.strong, frozenset):
            object.__setattr__(self, "strong", frozenset(self.strong))
        if any(not 0 <= e < self.m for e in self.strong):
            raise ContractViolation("strong set contains ids outside the edge range")

    @classmethod
    def all_strong(cls, graph: Graph) -> "Labeling":
        return cls(frozenset(range(graph.m)), graph.m)

    @classmethod
    def all_weak(cls, graph: Graph) -> "Labeling":
        return cls(frozenset(), graph.m)

    @property
    def weak(self) -> frozenset:
        return frozenset(range(self.m)) - self.strong

    def mask(self) -> np.ndarray:
        out = np.zeros(self.m, dtype=np.uint8)
        if self.strong:
            out[list(self.strong)] = 1
        return out


def dump_labeling(graph: Graph, labeling: Labeling) -> str:
    return "".join(
        f"{graph.name(u)}\t{graph.name(v)}\t{'strong' if e in labeling.strong else 'weak'}\n"
        for e, (u, v) in enumerate(graph.edges)
    )


def load_labeling(text: str, graph: Graph) -> Labeling:
    strong = set()
    labeled = set()
    for lineno, line in _iter_lines(text):
        parts = line.split()
        if len(parts) != 3 or parts[2] not in ("strong", "weak"):
            raise ParseError("expected 'u<TAB>v<TAB>strong|weak'", lineno)
        try:
            e = graph.edge_id(graph.vertex_id(parts[0]), graph.vertex_id(parts[1]))
        except (KeyError, ValueError):
            raise ParseError(f"edge {parts[0]} {parts[1]} not in graph", lineno) from None
        labeled.add(e)
        if parts[2] == "strong":
            strong.add(e)
    if len(labeled) != graph.m:
        raise ParseError(f"labeling covers {len(labeled)} of {graph.m} edges")
    return Labeling(frozenset(strong), graph.m)
