"""Exact solutions and property checkers for small instances.

:func:`exact_solve` is a branch and bound over strong/weak decisions per edge.
Each search node is propagated to a fixpoint with two rules:

* an undecided edge that is a bridge of some community, counting strong and
  undecided edges, must be strong (a disconnected community prunes the node);
* an undecided edge that would push the violation count of the decided strong
  edges past the current bound must be weak.

The count of violated wedges among decided strong edges is a valid lower
bound because violations only grow as strong edges are added.
:func:`brute_force_solve` enumerates every subset with no pruning at all and
serves as the differential reference for the search.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import SizeCapError
from .graph import CommunitySet, DisjointSets, Graph, Labeling, induced_strong_components
from .wedges import WedgeIndex, viol

DEFAULT_CAP_M = 22
OPTIMA_CAP = 1 << 16

UNDECIDED, STRONG, WEAK = 0, 1, -1


@dataclass(frozen=True)
class ExactSolution:
    labeling: Labeling
    opt_viol: int
    opt_tri: int
    # None when counting was skipped; capped at OPTIMA_CAP
    optima_count: int | None
    nodes: int = 0


def _bridges(adj, vertices):
    """Bridge edge ids of the graph ``adj`` (vertex -> [(nbr, eid)]) and its component count."""
    disc, low = {}, {}
    bridges = []
    components = 0
    timer = 0
    for root in vertices:
        if root in disc:
            continue
        components += 1
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent_edge, it = stack[-1]
            advanced = False
            for w, e in it:
                if e == parent_edge:
                    continue
                if w in disc:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        bridges.append(parent_edge)
    return bridges, components


class _Search:
    def __init__(self, graph: Graph, communities: CommunitySet):
        self.graph = graph
        self.communities = communities
        index = WedgeIndex(graph)
        self.T = index.T
        self.sisters = [[] for _ in range(graph.m)]
        for a, b in zip(index.e_lo.tolist(), index.e_hi.tolist()):
            self.sisters[a].append(b)
            self.sisters[b].append(a)
        self.comm_edges = [communities.induced_edges(graph, i) for i in range(communities.k)]
        self.comm_vertices = [sorted(c) for c in communities]
        # branch on edges with many wedges first
        self.order = sorted(range(graph.m), key=lambda e: (-len(self.sisters[e]), e))
        self.nodes = 0

    def set_strong(self, status, e):
        status[e] = STRONG
        return sum(1 for f in self.sisters[e] if status[f] == STRONG)

    def propagate(self, status, v, bound):
        """Fixpoint of the forcing rules. Returns the new violation count or None."""
        edges = self.graph.edges
        while True:
            changed = False
            for verts, cedges in zip(self.comm_vertices, self.comm_edges):
                adj = {x: [] for x in verts}
                for e in cedges:
                    if status[e] != WEAK:
                        a, b = edges[e]
                        adj[a].append((b, e))
                        adj[b].append((a, e))
                bridges, comps = _bridges(adj, verts)
                if comps > 1:
                    return None
                for e in bridges:
                    if status[e] == UNDECIDED:
                        v += self.set_strong(status, e)
                        changed = True
            if v > bound:
                return None
            slack = bound - v
            for e in range(len(status)):
                if status[e] == UNDECIDED:
                    add = sum(1 for f in self.sisters[e] if status[f] == STRONG)
                    if add > slack:
                        status[e] = WEAK
                        changed = True
            if not changed:
                return v

    def optimize(self, best_viol, best_status):
        self.best_viol = best_viol
        self.best_status = best_status
        if best_viol > 0:
            self._opt([UNDECIDED] * self.graph.m, 0)
        return self.best_viol, self.best_status

    def _opt(self, status, v):
        self.nodes += 1
        v = self.propagate(status, v, self.best_viol - 1)
        if v is None:
            return
        # completing with all undecided strong is feasible after propagation
        filled = list(status)
        fv = v
        for e in self.order:
            if filled[e] == UNDECIDED:
                fv += self.set_strong(filled, e)
        if fv < self.best_viol:
            self.best_viol, self.best_status = fv, filled
            if fv == 0 or fv == v:
                return
        branch = next((e for e in self.order if status[e] == UNDECIDED), None)
        if branch is None or self.best_viol <= v + 0:
            return
        weak = list(status)
        weak[branch] = WEAK
        self._opt(weak, v)
        if self.best_viol == 0:
            return
        strong = list(status)
        nv = v + self.set_strong(strong, branch)
        if nv < self.best_viol:
            self._opt(strong, nv)

    def count(self, opt):
        self.found = 0
        self.lex_min = None
        self._count([UNDECIDED] * self.graph.m, 0, opt)
        return self.found, self.lex_min

    def _count(self, status, v, bound):
        if self.found >= OPTIMA_CAP:
            return
        self.nodes += 1
        v = self.propagate(status, v, bound)
        if v is None:
            return
        branch = next((e for e in self.order if status[e] == UNDECIDED), None)
        if branch is None:
            self.found += 1
            key = tuple(e for e, s in enumerate(status) if s == STRONG)
            if self.lex_min is None or key < self.lex_min:
                self.lex_min = key
            return
        weak = list(status)
        weak[branch] = WEAK
        self._count(weak, v, bound)
        strong = list(status)
        nv = v + self.set_strong(strong, branch)
        if nv <= bound:
            self._count(strong, nv, bound)


def exact_solve(
    graph: Graph,
    communities: CommunitySet,
    cap_m: int = DEFAULT_CAP_M,
    count_optima: bool = True,
) -> ExactSolution:
    """Globally optimal labeling by branch and bound.

    With ``count_optima`` the number of optimal strong sets is counted (up to
    ``OPTIMA_CAP``) and the lexicographically smallest one is returned;
    otherwise the first optimum found is returned and ``optima_count`` is None.
    """
    if graph.m > cap_m:
        raise SizeCapError(f"exact search refused: m={graph.m} exceeds cap {cap_m}")
    from .greedy import greedy_max_tri

    search = _Search(graph, communities)
    start = greedy_max_tri(graph, communities)
    status = [STRONG if e in start.labeling.strong else WEAK for e in range(graph.m)]
    opt, status = search.optimize(start.violations, status)
    strong = frozenset(e for e, s in enumerate(status) if s == STRONG)
    count = None
    if count_optima:
        count, lex_min = search.count(opt)
        strong = frozenset(lex_min)
    return ExactSolution(Labeling(strong, graph.m), opt, search.T - opt, count, search.nodes)


def is_feasible(graph: Graph, communities: CommunitySet, labeling: Labeling) -> bool:
    return all(induced_strong_components(graph, labeling, c) == 1 for c in communities)


def brute_force_solve(graph: Graph, communities: CommunitySet, cap_m: int = 16) -> ExactSolution:
    """Every strong subset, no pruning. Lexicographically smallest optimum."""
    if graph.m > cap_m:
        raise SizeCapError(f"brute force refused: m={graph.m} exceeds cap {cap_m}")
    T = viol(Labeling.all_strong(graph), graph)
    best, count, best_key = None, 0, None
    for mask in range(1 << graph.m):
        strong = frozenset(e for e in range(graph.m) if mask >> e & 1)
        lab = Labeling(strong, graph.m)
        if not is_feasible(graph, communities, lab):
            continue
        v = viol(lab, graph)
        key = tuple(sorted(strong))
        if best is None or v < best:
            best, count, best_key = v, 1, key
        elif v == best:
            count += 1
            best_key = min(best_key, key)
    return ExactSolution(Labeling(frozenset(best_key), graph.m), best, T - best, count)


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    trials: int
    counterexample: dict | None = None


def _random_subset(rng, items):
    p = rng.random()
    return frozenset(x for x in items if rng.random() < p)


def check_supermodularity(graph: Graph, trials: int = 1000, seed: int = 0) -> CheckResult:
    """Sample ``S' <= S`` and ``e`` outside ``S``; marginal violations of ``e`` must not shrink."""
    rng = random.Random(seed)
    if graph.m == 0:
        return CheckResult(True, 0)
    for t in range(trials):
        e = rng.randrange(graph.m)
        big = _random_subset(rng, [f for f in range(graph.m) if f != e])
        small = _random_subset(rng, sorted(big))
        m_small = viol(Labeling(small | {e}, graph.m), graph) - viol(Labeling(small, graph.m), graph)
        m_big = viol(Labeling(big | {e}, graph.m), graph) - viol(Labeling(big, graph.m), graph)
        if m_small > m_big:
            return CheckResult(False, t + 1, {
                "small": sorted(small), "big": sorted(big), "edge": e,
                "marginal_small": m_small, "marginal_big": m_big,
            })
    return CheckResult(True, trials)


def check_monotonicity(graph: Graph, trials: int = 1000, seed: int = 0) -> CheckResult:
    """Sample ``S' <= S``; violations of ``S'`` must not exceed those of ``S``."""
    rng = random.Random(seed)
    for t in range(trials):
        big = _random_subset(rng, range(graph.m))
        small = _random_subset(rng, sorted(big))
        vs, vb = viol(Labeling(small, graph.m), graph), viol(Labeling(big, graph.m), graph)
        if vs > vb:
            return CheckResult(False, t + 1, {"small": sorted(small), "big": sorted(big)})
    return CheckResult(True, trials)


MATROID_EDGE_CAP = 9
DIRECT_SUM_EDGE_CAP = 14


def _connected_without(graph, vertices, edge_ids, removed_mask):
    dsu = DisjointSets(vertices)
    for bit, e in enumerate(edge_ids):
        if not removed_mask >> bit & 1:
            dsu.union(*graph.edges[e])
    return dsu.count == 1


def matroid_violation(family: set[int], ground_size: int) -> str | None:
    """Check the independence axioms on a family of bitmasks; None if they hold."""
    if 0 not in family:
        return "empty set is not independent"
    by_size: dict[int, list[int]] = {}
    for s in family:
        by_size.setdefault(bin(s).count("1"), []).append(s)
        for b in range(ground_size):
            if s >> b & 1 and s & ~(1 << b) not in family:
                return f"not downward closed at {s:#b}"
    for size, sets in by_size.items():
        for small in sets:
            aug = 0
            for b in range(ground_size):
                if not small >> b & 1 and small | (1 << b) in family:
                    aug |= 1 << b
            for big in by_size.get(size + 1, ()):
                if not (big & ~small) & aug:
                    return f"exchange fails for I={small:#b}, J={big:#b}"
    return None


@dataclass(frozen=True)
class MatroidCheck:
    passed: bool
    edges: tuple[int, ...]
    family: frozenset
    reason: str | None = None


def deletable_family(graph: Graph, communities, edges) -> set[int]:
    """Bitmasks over ``edges`` whose removal keeps every community connected."""
    parts = [(sorted(c), [(edges.index(e)) for e in graph.induced_edge_ids(c)]) for c in communities]
    fam = set()
    for mask in range(1 << len(edges)):
        ok = True
        for verts, bits in parts:
            dsu = DisjointSets(verts)
            for bit in bits:
                if not mask >> bit & 1:
                    dsu.union(*graph.edges[edges[bit]])
            if dsu.count != 1:
                ok = False
                break
        if ok:
            fam.add(mask)
    return fam


def check_matroid(graph: Graph, community) -> MatroidCheck:
    """Enumerate deletable weak sets of one community and verify the matroid axioms."""
    comm = frozenset(community)
    edges = graph.induced_edge_ids(comm)
    if len(edges) > MATROID_EDGE_CAP:
        raise SizeCapError(f"community has {len(edges)} induced edges, cap is {MATROID_EDGE_CAP}")
    fam = deletable_family(graph, [comm], edges)
    reason = matroid_violation(fam, len(edges))
    family = frozenset(
        frozenset(edges[b] for b in range(len(edges)) if s >> b & 1) for s in fam
    )
    return MatroidCheck(reason is None, tuple(edges), family, reason)


def check_direct_sum(graph: Graph, communities: CommunitySet) -> MatroidCheck:
    """For edge-disjoint communities, the jointly deletable sets are the direct sum
    of the per-community families, and form a matroid."""
    per = [graph.induced_edge_ids(c) for c in communities]
    edges = sorted(set().union(*per)) if per else []
    if sum(len(p) for p in per) != len(edges):
        return MatroidCheck(False, tuple(edges), frozenset(), "communities share edges")
    if len(edges) > DIRECT_SUM_EDGE_CAP:
        raise SizeCapError(f"{len(edges)} community edges, cap is {DIRECT_SUM_EDGE_CAP}")
    joint = deletable_family(graph, list(communities), edges)
    summed = {0}
    for c, pe in zip(communities, per):
        local = deletable_family(graph, [c], pe)
        lifted = set()
        for s in local:
            out = 0
            for b, e in enumerate(pe):
                if s >> b & 1:
                    out |= 1 << edges.index(e)
            lifted.add(out)
        summed = {a | b for a in summed for b in lifted}
    family = frozenset(
        frozenset(edges[b] for b in range(len(edges)) if s >> b & 1) for s in joint
    )
    if joint != summed:
        return MatroidCheck(False, tuple(edges), family, "joint family differs from direct sum")
    reason = matroid_violation(joint, len(edges))
    return MatroidCheck(reason is None, tuple(edges), family, reason)


def clique_partitions(graph: Graph, max_parts: int):
    """Yield partitions of the vertices into at most ``max_parts`` cliques."""
    n = graph.n

    def rec(v, parts):
        if v == n:
            yield [frozenset(p) for p in parts]
            return
        for p in parts:
            if all(graph.has_edge(v, w) for w in p):
                p.append(v)
                yield from rec(v + 1, parts)
                p.pop()
        if len(parts) < max_parts:
            parts.append([v])
            yield from rec(v + 1, parts)
            parts.pop()

    yield from rec(0, [])


def has_clique_cover(graph: Graph, k: int) -> bool:
    return next(clique_partitions(graph, k), None) is not None


def is_clique(graph: Graph, vertices) -> bool:
    return all(graph.has_edge(a, b) for a, b in combinations(sorted(vertices), 2))
