"""Labeling statistics and the intra/inter-community precision-recall protocol."""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass
from fractions import Fraction

from .graph import CommunitySet, Graph, Labeling, induced_strong_components
from .wedges import open_triangle_count, viol


@dataclass(frozen=True)
class LabelStats:
    """``b``: violated / open triangles, ``s``: strong / all edges,
    ``c``: mean strong components per community."""

    b: float
    s: float
    c: float
    violations: int
    open_triangles: int
    strong_edges: int
    edges: int


def label_stats(graph: Graph, communities: CommunitySet, labeling: Labeling) -> LabelStats:
    T = open_triangle_count(graph)
    v = viol(labeling, graph)
    comps = [induced_strong_components(graph, labeling, c) for c in communities]
    return LabelStats(
        b=v / T if T else 0.0,
        s=len(labeling.strong) / graph.m if graph.m else 0.0,
        c=sum(comps) / len(comps) if comps else 1.0,
        violations=v,
        open_triangles=T,
        strong_edges=len(labeling.strong),
        edges=graph.m,
    )


def split_communities(communities: CommunitySet, seed: int) -> tuple[CommunitySet, CommunitySet]:
    """Seeded shuffle; ``floor(k/2)`` communities go to test, the rest to train.

    Both halves keep the original relative order of their communities.
    """
    k = communities.k
    if k < 2:
        raise ValueError(f"need at least 2 communities to split, got {k}")
    order = list(range(k))
    random.Random(seed).shuffle(order)
    test_idx = sorted(order[: k // 2])
    train_idx = sorted(order[k // 2 :])
    pick = lambda idx: CommunitySet(tuple(communities[i] for i in idx))
    return pick(train_idx), pick(test_idx)


def _ratio(num: int, den: int) -> Fraction | None:
    return Fraction(num, den) if den else None


@dataclass(frozen=True)
class PRReport:
    """Precision and recall of weak edges against inter-community edges and of
    strong edges against intra-community edges. ``None`` marks 0/0."""

    P_W: Fraction | None
    R_W: Fraction | None
    P_S: Fraction | None
    R_S: Fraction | None
    weak: int
    strong: int
    inter: int
    intra: int
    weak_inter: int
    strong_intra: int

    def as_floats(self) -> dict:
        return {k: None if getattr(self, k) is None else float(getattr(self, k))
                for k in ("P_W", "R_W", "P_S", "R_S")}


def edge_classes(graph: Graph, test: CommunitySet) -> tuple[set[int], set[int]]:
    """(intra, inter) edge ids for the given test communities.

    Intra: both endpoints in one community. Inter: endpoints in different
    communities and no community holds both.
    """
    member: dict[int, set[int]] = {}
    for i, c in enumerate(test):
        for v in c:
            member.setdefault(v, set()).add(i)
    intra, inter = set(), set()
    for e, (u, v) in enumerate(graph.edges):
        mu, mv = member.get(u), member.get(v)
        if not mu or not mv:
            continue
        if mu & mv:
            intra.add(e)
        else:
            inter.add(e)
    return intra, inter


def pr_report(
    graph: Graph, test: CommunitySet, labeling: Labeling, touched_only: bool = False
) -> PRReport:
    """Precision/recall of a labeling against held-out communities.

    By default ``|W|`` and ``|S|`` count every edge. With ``touched_only`` the
    precision denominators only count edges that are intra or inter.
    """
    intra, inter = edge_classes(graph, test)
    S = set(labeling.strong)
    W = set(range(graph.m)) - S
    if touched_only:
        scope = intra | inter
        S &= scope
        W &= scope
    wi = len(W & inter)
    si = len(S & intra)
    return PRReport(
        P_W=_ratio(wi, len(W)),
        R_W=_ratio(wi, len(inter)),
        P_S=_ratio(si, len(S)),
        R_S=_ratio(si, len(intra)),
        weak=len(W),
        strong=len(S),
        inter=len(inter),
        intra=len(intra),
        weak_inter=wi,
        strong_intra=si,
    )


def _fmt(x) -> str:
    if x is None:
        return "undefined"
    if isinstance(x, float):
        return f"{x:.6f}"
    return str(x)


def report_document(stats: LabelStats | None = None, pr: PRReport | None = None) -> dict:
    doc = {}
    if stats is not None:
        doc.update({"b": stats.b, "s": stats.s, "c": stats.c})
        doc["sizes"] = {
            "violations": stats.violations,
            "open_triangles": stats.open_triangles,
            "strong_edges": stats.strong_edges,
            "edges": stats.edges,
        }
    if pr is not None:
        doc.update(pr.as_floats())
        doc.setdefault("sizes", {}).update(
            {k: v for k, v in asdict(pr).items() if k not in ("P_W", "R_W", "P_S", "R_S")}
        )
    return doc


def to_key_value(doc: dict, prefix: str = "") -> str:
    lines = []
    for key in doc:
        val = doc[key]
        if isinstance(val, dict):
            lines.append(to_key_value(val, f"{prefix}{key}."))
        else:
            lines.append(f"{prefix}{key}={_fmt(val)}\n")
    return "".join(lines)


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
