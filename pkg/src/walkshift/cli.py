"""Command-line front end.

Exit status: 0 success or pass, 1 a checked claim failed (or nothing was
reachable), 2 usage, input or parse error, 3 a search budget ran out.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .avoidability import DEFAULT_BUDGET, extensions, is_avoidable, is_closable
from .corpus import DEFAULT_SEED
from .errors import BudgetExceeded, InputError
from .families import FAMILIES, FamilySpec, build
from .graphio import format_walk, parse_walk, read_graph, serialize_graph, to_dot
from .shifting import (
    path_shifting_dfs,
    path_shifting_via_line_graph,
    shift_reachable,
    shifting_induced,
)
from .verification import SUITES, run_suite, shift_statistics
from .walks import KINDS, WalkKind, as_kind, classify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _emit(args, obj: dict, text: str) -> None:
    print(json.dumps(obj, sort_keys=True) if args.json_lines else text)


def _graph_and_walk(args):
    g = read_graph(args.graph)
    w = parse_walk(g, args.walk)
    return g, w


def cmd_classify(args) -> int:
    g, w = _graph_and_walk(args)
    kinds = [as_kind(args.type)] if args.type else list(KINDS)
    result = {t.value: classify(g, w, t) for t in kinds}
    if args.type:
        _emit(args, {"walk": format_walk(w), **result}, _bool(result[args.type]))
    else:
        for t, ok in result.items():
            _emit(args, {"walk": format_walk(w), "type": t, "value": ok}, f"{t} {_bool(ok)}")
    return EXIT_OK


def cmd_extensions(args) -> int:
    g, w = _graph_and_walk(args)
    for x in extensions(g, w, args.type):
        _emit(args, {"extension": format_walk(x.walk)}, format_walk(x.walk))
    return EXIT_OK


def cmd_closable(args) -> int:
    g, w = _graph_and_walk(args)
    ok = is_closable(g, w, args.type, args.mode, args.budget)
    _emit(args, {"walk": format_walk(w), "type": args.type, "closable": ok}, _bool(ok))
    return EXIT_OK


def cmd_avoidable(args) -> int:
    g, w = _graph_and_walk(args)
    ok = is_avoidable(g, w, args.type, args.mode, args.budget)
    _emit(args, {"walk": format_walk(w), "type": args.type, "avoidable": ok}, _bool(ok))
    return EXIT_OK


def _print_sequence(args, seq) -> None:
    if args.json_lines:
        stats = vars(seq.stats)
        print(json.dumps({"type": seq.kind.value, "steps": [format_walk(s) for s in seq.steps],
                          "stats": stats}, sort_keys=True))
    else:
        for s in seq.steps:
            print(format_walk(s))


def cmd_shift(args) -> int:
    g, w = _graph_and_walk(args)
    t = as_kind(args.type)
    if t is WalkKind.IND:
        seq = shifting_induced(g, w, args.budget)
    elif t is WalkKind.PTH:
        if args.method == "line":
            seq = path_shifting_via_line_graph(g, w, args.budget)
        else:
            seq = path_shifting_dfs(g, w)
    else:
        seq = shift_reachable(g, w, t, lambda x: is_avoidable(g, x, t), args.budget)
        if seq is None:
            print(f"no {t.value}-avoidable walk can be reached from {format_walk(w)}", file=sys.stderr)
            return EXIT_FAIL
    _print_sequence(args, seq)
    return EXIT_OK


def cmd_reach(args) -> int:
    g, w = _graph_and_walk(args)
    t = as_kind(args.type)
    if args.to:
        goal = parse_walk(g, args.to).canonical()

        def target(x):
            return x.canonical() == goal
    else:
        def target(x):
            return is_avoidable(g, x, t)
    seq = shift_reachable(g, w, t, target, args.budget)
    if seq is None:
        print("unreachable", file=sys.stderr)
        return EXIT_FAIL
    _print_sequence(args, seq)
    return EXIT_OK


def cmd_family(args) -> int:
    g = build(FamilySpec(args.name, tuple(args.params)))
    sys.stdout.write(to_dot(g) if args.dot else serialize_graph(g))
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = run_suite(args.suite, max_order=args.max_order, seed=args.seed,
                        multigraphs=args.multigraphs, large=args.large)
    failed = 0
    for r in reports:
        failed += not r.passed
        if args.json_lines:
            print(json.dumps(r.to_dict(), sort_keys=True, default=str))
        else:
            print(r.line())
            if not r.passed:
                for wit in r.witnesses:
                    print(f"    witness: {wit}")
    if not args.json_lines:
        print(f"{len(reports) - failed}/{len(reports)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_stats(args) -> int:
    table = shift_statistics(args.max_order, args.max_len)
    for name, row in table.items():
        text = (f"{name}: {row['instances']} instances, p max {row.get('max_p')} mean {row.get('mean_p')}, "
                f"depth max {row.get('max_depth')} mean {row.get('mean_depth')}")
        _emit(args, {"procedure": name, **row}, text)
    return EXIT_OK


def cmd_dot(args) -> int:
    g = read_graph(args.graph)
    w = parse_walk(g, args.walk) if args.walk else None
    sys.stdout.write(to_dot(g, w))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="walkshift", description="Avoidable walks and shifting in multigraphs.")
    p.add_argument("--json-lines", action="store_true", help="one JSON object per output line")
    sub = p.add_subparsers(dest="command", required=True)
    types = [t.value for t in KINDS]

    def walk_cmd(name, func, help_, need_type=True, mode=False):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph", help=".mg file, or - for stdin")
        sp.add_argument("--walk", required=True, help="comma-separated vertex ids, v:edge to pick an edge")
        sp.add_argument("--type", choices=types, required=need_type)
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        if mode:
            sp.add_argument("--mode", choices=["fast", "oracle"], default="fast")
        sp.set_defaults(func=func)
        return sp

    walk_cmd("classify", cmd_classify, "is the walk of the given type (all types if omitted)", need_type=False)
    walk_cmd("extensions", cmd_extensions, "list the t-extensions of a walk")
    walk_cmd("closable", cmd_closable, "is the walk t-closable", mode=True)
    walk_cmd("avoidable", cmd_avoidable, "is the walk t-avoidable", mode=True)
    sp = walk_cmd("shift", cmd_shift, "shift the walk to an avoidable one")
    sp.add_argument("--method", choices=["dfs", "line"], default="dfs", help="path procedure (type pth)")
    sp = walk_cmd("reach", cmd_reach, "shortest shift sequence (BFS) to --to, or to an avoidable walk")
    sp.add_argument("--to", help="target walk")

    sp = sub.add_parser("family", help="print a named graph as .mg")
    sp.add_argument("name", choices=FAMILIES)
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("--dot", action="store_true", help="DOT instead of .mg")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("verify-paper", help="run the reproduction suites")
    sp.add_argument("--suite", default="all", choices=("all",) + SUITES)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed of the random multigraph corpus")
    sp.add_argument("--max-order", type=int, default=7, choices=range(1, 8), metavar="{1..7}")
    sp.add_argument("--multigraphs", type=int, default=200)
    sp.add_argument("--large", action="store_true", help="include K2,5 (trail length 7)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("stats", help="shift sequence lengths and recursion depths over the corpus")
    sp.add_argument("--max-order", type=int, default=7, choices=range(1, 8), metavar="{1..7}")
    sp.add_argument("--max-len", type=int, default=3)
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("dot", help="DOT export, walk edges drawn bold")
    sp.add_argument("graph")
    sp.add_argument("--walk")
    sp.set_defaults(func=cmd_dot)
    return p


def run_command(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
