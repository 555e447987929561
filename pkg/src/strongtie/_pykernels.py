"""Pure Python/numpy versions of the compiled kernels, same signatures."""

from itertools import combinations

import numpy as np


def enumerate_wedges(indptr, indices, adj_eid):
    nbrs = [indices[indptr[v] : indptr[v + 1]].tolist() for v in range(len(indptr) - 1)]
    eids = [adj_eid[indptr[v] : indptr[v + 1]].tolist() for v in range(len(indptr) - 1)]
    adj = [set(x) for x in nbrs]
    rows = []
    for v, (nv, ev) in enumerate(zip(nbrs, eids)):
        for (a, ea), (b, eb) in combinations(zip(nv, ev), 2):
            if b not in adj[a]:
                rows.append((v, a, b, ea, eb))
    out = np.array(rows, dtype=np.int64).reshape(-1, 5)
    return tuple(np.ascontiguousarray(out[:, i]) for i in range(5))


def demote(e, strong, counts, ptr, wids, elo, ehi):
    strong[e] = 0
    ws = wids[ptr[e] : ptr[e + 1]]
    sisters = np.where(elo[ws] == e, ehi[ws], elo[ws])
    hit = sisters[strong[sisters] != 0]
    np.subtract.at(counts, hit, 1)
    counts[e] = 0
    return int(hit.size)


def count_violations(strong, elo, ehi):
    if elo.size == 0:
        return 0
    return int(np.count_nonzero(strong[elo] & strong[ehi]))
