"""Command-line interface.

Exit codes: 0 ok, 2 parse error, 3 infeasible communities, 4 size cap
refusal, 5 property-check failure. ``STRONGTIE_SEED`` and ``STRONGTIE_CAP_M``
override the defaults of ``--seed`` and ``--cap-m``.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import checks, karate
from .baselines import baseline_angluin, baseline_sintos
from .errors import ParseError, PropertyCheckError, StrongTieError
from .evaluation import (
    label_stats,
    pr_report,
    report_document,
    split_communities,
    to_json,
    to_key_value,
)
from .graph import CommunitySet, dump_communities, dump_graph, dump_labeling, load_communities, load_graph
from .greedy import greedy_max_tri, minimize_strong_post_pass
from .oracle import exact_solve
from .reduction import build_gadget

COMMANDS = ("label", "baseline-angluin", "baseline-sintos", "eval", "oracle", "reduce", "check")


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"environment variable {name} must be an integer, got {raw!r}") from None


def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def load_inputs(args, need_communities=True):
    if args.karate:
        graph = karate.graph()
        comm_text = karate.COMMUNITY_TEXT
    else:
        if not args.graph:
            raise ParseError("--graph is required (or use --karate)")
        graph = load_graph(_read(args.graph))
        comm_text = _read(args.communities) if args.communities else None
    if comm_text is None:
        if need_communities:
            raise ParseError("--communities is required for this command")
        return graph, CommunitySet(())
    return graph, load_communities(comm_text, graph, restrict_to_lcc=args.restrict_to_lcc)


def _emit_report(args, doc):
    text = to_json(doc) if args.format == "json" else to_key_value(doc)
    _write(args.report, text)


def _solve_greedy(args, graph, communities):
    result = greedy_max_tri(
        graph, communities, args.seed, demote_zero_gain=args.demote_zero_gain, backend=args.backend
    )
    if args.minimize_strong:
        result = minimize_strong_post_pass(graph, communities, result, backend=args.backend)
    return result.labeling


def cmd_label(args):
    graph, communities = load_inputs(args)
    labeling = _solve_greedy(args, graph, communities)
    if args.output:
        _write(args.output, dump_labeling(graph, labeling))
    _emit_report(args, report_document(label_stats(graph, communities, labeling)))


def cmd_baseline(args):
    graph, communities = load_inputs(args, need_communities=args.command == "baseline-angluin")
    if args.command == "baseline-angluin":
        labeling = baseline_angluin(graph, communities)
    else:
        labeling = baseline_sintos(graph, args.sintos_mode)
    if args.output:
        _write(args.output, dump_labeling(graph, labeling))
    _emit_report(args, report_document(label_stats(graph, communities, labeling)))


def cmd_eval(args):
    graph, communities = load_inputs(args)
    train, test = split_communities(communities, args.split_seed)
    methods = {
        "greedy": _solve_greedy(args, graph, train),
        "angluin": baseline_angluin(graph, train),
        "sintos": baseline_sintos(graph, args.sintos_mode),
    }
    doc = {
        "config": {
            "split_seed": args.split_seed,
            "seed": args.seed,
            "train_communities": train.k,
            "test_communities": test.k,
            "touched_only": args.touched_only,
        }
    }
    for name, lab in methods.items():
        doc[name] = report_document(
            label_stats(graph, train, lab), pr_report(graph, test, lab, args.touched_only)
        )
    if args.format == "json":
        text = to_json(doc)
    else:
        text = to_key_value(doc) + "\n" + format_table(doc, list(methods))
    _write(args.output, text)


def format_table(doc, methods):
    cols = ("b", "s", "c", "P_W", "R_W", "P_S", "R_S")
    lines = ["method   " + "".join(f"{c:>9}" for c in cols)]
    for m in methods:
        cells = "".join(
            f"{'n/a':>9}" if doc[m][c] is None else f"{doc[m][c]:9.4f}" for c in cols
        )
        lines.append(f"{m:<9}{cells}")
    return "\n".join(lines) + "\n"


def cmd_oracle(args):
    graph, communities = load_inputs(args)
    sol = exact_solve(graph, communities, cap_m=args.cap_m)
    if args.output:
        _write(args.output, dump_labeling(graph, sol.labeling))
    doc = {"opt_viol": sol.opt_viol, "opt_tri": sol.opt_tri, "optima_count": sol.optima_count}
    _emit_report(args, doc)


def cmd_reduce(args):
    if args.karate:
        graph = karate.graph()
    else:
        if not args.graph:
            raise ParseError("--graph is required (or use --karate)")
        graph = load_graph(_read(args.graph))
    gadget = build_gadget(graph, args.k)
    prefix = args.output or "gadget"
    _write(f"{prefix}.edges", dump_graph(gadget.H))
    _write(f"{prefix}.communities", dump_communities(gadget.H, gadget.community))
    _emit_report(args, {
        "vertices": gadget.H.n,
        "edges": gadget.H.m,
        "k": gadget.k,
        "singleton_added": gadget.singleton_added,
    })


def cmd_check(args):
    if args.karate or args.graph:
        graph, communities = load_inputs(args, need_communities=False)
    else:
        graph, communities = karate.graph(), karate.communities()
    outcomes = checks.run_all(graph, communities, seed=args.seed, trials=args.trials, cap_m=args.cap_m)
    for o in outcomes:
        print(f"{'PASS' if o.passed else 'FAIL'} {o.name}: {o.detail}")
    failed = [o.name for o in outcomes if not o.passed]
    if failed:
        raise PropertyCheckError(f"failed checks: {', '.join(failed)}")


HANDLERS = {
    "label": cmd_label,
    "baseline-angluin": cmd_baseline,
    "baseline-sintos": cmd_baseline,
    "eval": cmd_eval,
    "oracle": cmd_oracle,
    "reduce": cmd_reduce,
    "check": cmd_check,
}


def build_parser():
    seed_default = _env_int("STRONGTIE_SEED", 0)
    cap_default = _env_int("STRONGTIE_CAP_M", 22)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-g", "--graph", help="edge-list file")
    common.add_argument("-c", "--communities", help="community file")
    common.add_argument("--karate", action="store_true", help="use the built-in karate club fixture")
    common.add_argument("--no-lcc", dest="restrict_to_lcc", action="store_false",
                        help="reject disconnected communities instead of keeping their largest component")
    common.add_argument("-o", "--output", help="output file (labeling, eval table, or gadget prefix)")
    common.add_argument("--report", help="stats report file (default: stdout)")
    common.add_argument("--format", choices=("kv", "json"), default="kv")
    common.add_argument("--seed", type=int, default=seed_default, help="tie-break / sampling seed")
    common.add_argument("--cap-m", type=int, default=cap_default, help="edge cap for exact search")
    common.add_argument("--backend", choices=("forest", "naive"), default="forest",
                        help="connectivity backend")

    parser = argparse.ArgumentParser(prog="strongtie", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("label", "eval"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--minimize-strong", action="store_true", help="run the strong-edge post-pass")
        p.add_argument("--demote-zero-gain", action="store_true",
                       help="also demote edges that remove no violations")
        if name == "eval":
            p.add_argument("--split-seed", type=int, default=0)
            p.add_argument("--sintos-mode", choices=("matching", "exact"), default="matching")
            p.add_argument("--touched-only", action="store_true",
                           help="precision denominators count only intra/inter edges")
    sub.add_parser("baseline-angluin", parents=[common])
    p = sub.add_parser("baseline-sintos", parents=[common])
    p.add_argument("--sintos-mode", choices=("matching", "exact"), default="matching")
    sub.add_parser("oracle", parents=[common])
    p = sub.add_parser("reduce", parents=[common])
    p.add_argument("-k", type=int, required=True, help="clique-cover budget")
    p = sub.add_parser("check", parents=[common])
    p.add_argument("--trials", type=int, default=200)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        HANDLERS[args.command](args)
    except StrongTieError as exc:
        print(f"strongtie: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"strongtie: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
