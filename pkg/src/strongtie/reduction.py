"""Clique-cover gadget: a zero-violation labeling exists iff a small clique cover does.

For a graph ``G`` on ``v_1..v_n`` and a budget ``k`` the gadget ``H`` has the
original vertices, one copy ``u_i`` per vertex and ``k`` hubs ``x_j``. It keeps
``E(G)``, adds ``u_i v_i``, ``v_i x_j`` and ``u_i x_j`` for all ``i, j``, makes
the hubs a clique, and uses the whole vertex set as the only community.
``G`` must contain an isolated vertex; if it does not, one is added and ``k``
grows by one, which does not change whether a cover exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolation, StrongTieError
from .graph import CommunitySet, Graph, Labeling, check_feasible
from .oracle import is_clique
from .wedges import viol


class ReductionError(StrongTieError):
    """The extracted vertex partition is not a clique cover."""


@dataclass(frozen=True)
class Gadget:
    H: Graph
    community: CommunitySet
    base: Graph
    k: int
    # (role, index) per vertex of H, role one of "v", "u", "x"
    vertex_roles: tuple[tuple[str, int], ...]
    singleton_added: bool

    @property
    def n(self) -> int:
        return self.base.n

    def v(self, i: int) -> int:
        return i

    def u(self, i: int) -> int:
        return self.base.n + i

    def x(self, j: int) -> int:
        return 2 * self.base.n + j

    def expected_edge_count(self) -> int:
        n, k = self.base.n, self.k
        return self.base.m + n + 2 * n * k + k * (k - 1) // 2


def build_gadget(g: Graph, k: int) -> Gadget:
    if k < 1:
        raise ValueError("k must be at least 1")
    added = not any(g.degree(v) == 0 for v in range(g.n))
    if added:
        names = list(g.names) if g.names else [str(v) for v in range(g.n)]
        extra = "_isolated"
        while extra in names:
            extra += "_"
        g = Graph(g.n + 1, g.edges, names + [extra])
        k += 1
    n = g.n
    base_names = [g.name(v) for v in range(n)]
    names = [f"v:{s}" for s in base_names] + [f"u:{s}" for s in base_names]
    names += [f"x:{j + 1}" for j in range(k)]
    roles = [("v", i) for i in range(n)] + [("u", i) for i in range(n)]
    roles += [("x", j) for j in range(k)]

    edges = list(g.edges)
    for i in range(n):
        edges.append((n + i, i))
        for j in range(k):
            edges.append((i, 2 * n + j))
            edges.append((n + i, 2 * n + j))
    for a in range(k):
        for b in range(a + 1, k):
            edges.append((2 * n + a, 2 * n + b))
    H = Graph(2 * n + k, edges, names)
    community = CommunitySet((frozenset(range(H.n)),))
    return Gadget(H, community, g, k, tuple(roles), added)


def _normalize_cover(gadget: Gadget, cover) -> list[frozenset]:
    parts = [frozenset(p) for p in cover if p]
    if gadget.singleton_added:
        extra = gadget.base.n - 1
        if not any(extra in p for p in parts):
            parts.append(frozenset([extra]))
    seen = set()
    for p in parts:
        if seen & p:
            raise ContractViolation("cover parts overlap")
        seen |= p
    if seen != set(range(gadget.base.n)):
        raise ContractViolation("cover does not partition the vertex set")
    if len(parts) > gadget.k:
        raise ContractViolation(f"cover has {len(parts)} parts, budget is {gadget.k}")
    for p in parts:
        if not is_clique(gadget.base, p):
            raise ContractViolation(f"part {sorted(p)} is not a clique")
    return parts


def cover_to_labeling(gadget: Gadget, cover) -> Labeling:
    """Strong set built from a clique cover: ``u_i v_i`` and ``v_i x_j`` for
    ``v_i`` in part ``j``, plus the star from ``x_1`` to the other hubs."""
    parts = _normalize_cover(gadget, cover)
    H = gadget.H
    strong = set()
    for j, part in enumerate(parts):
        for i in part:
            strong.add(H.edge_id(gadget.u(i), gadget.v(i)))
            strong.add(H.edge_id(gadget.v(i), gadget.x(j)))
    for j in range(1, gadget.k):
        strong.add(H.edge_id(gadget.x(0), gadget.x(j)))
    return Labeling(frozenset(strong), H.m)


def labeling_to_cover(gadget: Gadget, labeling: Labeling) -> list[frozenset]:
    """Recover a clique cover of the base graph from a zero-violation labeling.

    Vertices whose copy has a strong hub edge are grouped by that hub; the
    others are grouped by their own strong hub edge. Each group then loses
    the vertices already placed in earlier groups.
    """
    H, n = gadget.H, gadget.base.n
    if viol(labeling, H) != 0:
        raise ContractViolation("labeling has violations")
    check_feasible(H, gadget.community, labeling.strong)
    S = labeling.strong

    def strong_edge(a, b):
        return H.edge_id(a, b) in S

    Y = {i for i in range(n) if any(strong_edge(gadget.u(i), gadget.x(j)) for j in range(gadget.k))}
    parts, placed = [], set()
    for j in range(gadget.k):
        A = {i for i in Y if strong_edge(gadget.u(i), gadget.x(j))}
        B = {i for i in range(n) if i not in Y and strong_edge(gadget.v(i), gadget.x(j))}
        P = (A | B) - placed
        placed |= P
        parts.append(frozenset(P))
    if placed != set(range(n)):
        raise ReductionError(f"vertices {sorted(set(range(n)) - placed)} were not covered")
    for P in parts:
        if not is_clique(gadget.base, P):
            raise ReductionError(f"extracted part {sorted(P)} is not a clique")
    return [P for P in parts if P]
