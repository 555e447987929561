"""Seeded random instances for property checks and benchmarks."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import CommunitySet, Graph


def gnm(n: int, m: int, rng: random.Random) -> Graph:
    pairs = list(combinations(range(n), 2))
    m = min(m, len(pairs))
    return Graph(n, sorted(rng.sample(pairs, m)))


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def connected_gnm(n: int, m: int, rng: random.Random) -> Graph:
    """Random spanning tree plus ``m - (n - 1)`` extra random edges."""
    verts = list(range(n))
    rng.shuffle(verts)
    edges = {tuple(sorted((verts[i], verts[rng.randrange(i)]))) for i in range(1, n)}
    rest = [p for p in combinations(range(n), 2) if p not in edges]
    edges |= set(rng.sample(rest, max(0, min(m - len(edges), len(rest)))))
    return Graph(n, sorted(edges))


def random_community(graph: Graph, size: int, rng: random.Random, allowed=None) -> frozenset:
    """Connected vertex set grown from a random start along random edges.

    ``allowed`` optionally restricts which edges may be used for growth and
    which vertices may join (by edge id set).
    """
    if graph.n == 0:
        return frozenset()
    start = rng.randrange(graph.n)
    comm = {start}
    while len(comm) < size:
        frontier = sorted(
            (w, e)
            for v in comm
            for w, e in zip(graph.neighbors(v).tolist(), graph.incident_edges(v).tolist())
            if w not in comm and (allowed is None or e in allowed)
        )
        if not frontier:
            break
        comm.add(rng.choice(frontier)[0])
    return frozenset(comm)


def random_instance(rng: random.Random, n: int, m: int, k: int, min_size: int = 2):
    """Connected random graph with ``k`` random connected communities."""
    g = connected_gnm(n, m, rng)
    comms = [random_community(g, rng.randint(min_size, n), rng) for _ in range(k)]
    return g, CommunitySet.from_sets(g, comms)
