"""The property suite run by ``strongtie check``."""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import oracle
from .errors import PropertyCheckError, SizeCapError
from .generators import random_instance
from .graph import CommunitySet, Graph, induced_strong_components
from .greedy import approximation_certificate, greedy_max_tri, minimize_strong_post_pass
from .wedges import viol

STATELESS_RECOUNT_EDGE_CAP = 400


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    detail: str = ""


def counter_consistency(graph: Graph, communities: CommunitySet) -> CheckOutcome:
    """Incremental counters against a recount after every greedy demotion."""
    bad = []
    stateless = graph.m <= STATELESS_RECOUNT_EDGE_CAP

    def step(index, decision):
        if not decision.demoted or bad:
            return
        ref = viol(index.labeling(), graph) if stateless else index.recount()
        if ref != index.total_violations:
            bad.append((decision.edge, index.total_violations, ref))

    result = greedy_max_tri(graph, communities, on_step=step, debug=True)
    final = viol(result.labeling, graph)
    if bad:
        return CheckOutcome("counter-consistency", False, f"first mismatch {bad[0]}")
    if final != result.violations:
        return CheckOutcome("counter-consistency", False, f"final {result.violations} != {final}")
    return CheckOutcome("counter-consistency", True, f"{len(result.demotions)} decisions")


def feasibility(graph: Graph, communities: CommunitySet) -> CheckOutcome:
    result = greedy_max_tri(graph, communities)
    post = minimize_strong_post_pass(graph, communities, result)
    for name, lab in (("greedy", result.labeling), ("post-pass", post.labeling)):
        for i, c in enumerate(communities):
            if induced_strong_components(graph, lab, c) != 1:
                return CheckOutcome("feasibility", False, f"{name} disconnects community {i}")
    if post.violations > result.violations:
        return CheckOutcome("feasibility", False, "post-pass increased violations")
    return CheckOutcome("feasibility", True)


def submodularity(graph: Graph, trials: int, seed: int) -> list[CheckOutcome]:
    sup = oracle.check_supermodularity(graph, trials, seed)
    mono = oracle.check_monotonicity(graph, trials, seed)
    return [
        CheckOutcome("supermodularity", sup.passed, str(sup.counterexample or f"{sup.trials} trials")),
        CheckOutcome("monotonicity", mono.passed, str(mono.counterexample or f"{mono.trials} trials")),
    ]


def matroids(graph: Graph, communities: CommunitySet) -> CheckOutcome:
    checked = 0
    for i, c in enumerate(communities):
        if len(communities.induced_edges(graph, i)) > oracle.MATROID_EDGE_CAP:
            continue
        res = oracle.check_matroid(graph, c)
        checked += 1
        if not res.passed:
            return CheckOutcome("bond-matroid", False, f"community {i}: {res.reason}")
    return CheckOutcome("bond-matroid", True, f"{checked} communities")


def ratio(graph: Graph, communities: CommunitySet, cap_m: int) -> CheckOutcome:
    try:
        sol = oracle.exact_solve(graph, communities, cap_m=cap_m, count_optima=False)
    except SizeCapError as exc:
        return CheckOutcome("ratio-bound", True, f"skipped: {exc}")
    try:
        rep = approximation_certificate(graph, communities, greedy_max_tri(graph, communities), sol.opt_tri)
    except PropertyCheckError as exc:
        return CheckOutcome("ratio-bound", False, str(exc))
    return CheckOutcome("ratio-bound", True, f"ratio {float(rep.ratio):.4f} >= {rep.bound}")


def random_suite(seed: int, instances: int = 30) -> CheckOutcome:
    """Ratio bound and counter consistency on small random instances."""
    rng = random.Random(seed)
    for t in range(instances):
        n = rng.randint(4, 7)
        g, comms = random_instance(rng, n, rng.randint(n - 1, min(14, n * (n - 1) // 2)), rng.randint(1, 2))
        for out in (ratio(g, comms, 22), counter_consistency(g, comms)):
            if not out.passed:
                return CheckOutcome("random-suite", False, f"instance {t}: {out.name}: {out.detail}")
    return CheckOutcome("random-suite", True, f"{instances} instances")


def run_all(graph: Graph, communities: CommunitySet, seed: int = 0, trials: int = 200, cap_m: int = 22):
    out = [counter_consistency(graph, communities), feasibility(graph, communities)]
    if graph.m <= STATELESS_RECOUNT_EDGE_CAP:
        out += submodularity(graph, trials, seed)
    out.append(matroids(graph, communities))
    out.append(ratio(graph, communities, cap_m))
    out.append(random_suite(seed))
    return out
