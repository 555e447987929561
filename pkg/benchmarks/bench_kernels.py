"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--n 2000] [--m 12000] [--repeat 3]

Reports the best of ``--repeat`` runs for wedge enumeration, demoting every
edge in order, and a full greedy run with one community spanning the graph.
"""

import argparse
import random
import time

from strongtie import _kernels
from strongtie.generators import connected_gnm
from strongtie.graph import CommunitySet
from strongtie.greedy import greedy_max_tri
from strongtie.wedges import WedgeIndex


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def demote_all(graph, backend):
    idx = WedgeIndex(graph, backend=backend)
    for e in range(graph.m):
        idx.demote(e)
    return idx.total_violations


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=2000)
    ap.add_argument("--m", type=int, default=12000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    graph = connected_gnm(args.n, args.m, random.Random(args.seed))
    comm = CommunitySet((frozenset(range(graph.n)),))
    backends = ["python"] + (["compiled"] if _kernels.compiled_kernels is not None else [])
    print(f"graph: n={graph.n} m={graph.m} wedges={WedgeIndex(graph).T}")
    if len(backends) == 1:
        print("compiled kernels not built; timing the Python fallback only")

    tasks = {
        "enumerate": lambda b: WedgeIndex(graph, backend=b).T,
        "demote-all": lambda b: demote_all(graph, b),
        "greedy": lambda b: greedy_max_tri(graph, comm, kernel_backend=b).violations,
    }
    print(f"{'task':<12}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, task in tasks.items():
        results = {b: best_of(lambda: task(b), args.repeat) for b in backends}
        outs = {out for _, out in results.values()}
        assert len(outs) == 1, f"{name}: backends disagree {results}"
        row = f"{name:<12}" + "".join(f"{results[b][0]:>11.3f}s" for b in backends)
        if len(backends) > 1:
            row += f"{results['python'][0] / results['compiled'][0]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
