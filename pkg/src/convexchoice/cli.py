"""Command-line interface: eval, check-laws, monty, version."""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import __version__
from .laws import GenConfig, check_all, check_law, law_names, render_report
from .programs import SourceError, monty, parse, eval_expr, render


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _cmd_eval(args: argparse.Namespace) -> int:
    try:
        text = _read_source(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        value = eval_expr(parse(text))
    except SourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(render(value, args.format))
    return 0


def _cmd_check_laws(args: argparse.Namespace) -> int:
    config = GenConfig(trials=args.trials, seed=args.seed)
    if args.law is not None:
        if args.law not in law_names():
            print(f"error: unknown law {args.law!r}", file=sys.stderr)
            return 1
        reports = [check_law(args.law, config)]
    else:
        reports = check_all(config)
    for report in reports:
        print(render_report(report))
    failed = [r for r in reports if not r.ok]
    if failed:
        print(f"{len(failed)} law(s) failed", file=sys.stderr)
        return 2
    return 0


def _cmd_monty(args: argparse.Namespace) -> int:
    strategies = ["stick", "switch"] if args.strategy == "both" else [args.strategy]
    for strategy in strategies:
        print(f"{strategy}: {render(monty(strategy))}")
    return 0


def _cmd_version(_args: argparse.Namespace) -> int:
    print(__version__)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convexchoice",
        description="Exact model of combined probabilistic and nondeterministic choice.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="parse, evaluate, and render a program")
    p_eval.add_argument("file", help="program file, or '-' for stdin")
    p_eval.add_argument("--format", choices=["text", "structured"], default="text")
    p_eval.set_defaults(func=_cmd_eval)

    p_laws = sub.add_parser("check-laws", help="run the randomized law suite")
    p_laws.add_argument("--trials", type=int, default=200)
    p_laws.add_argument("--seed", type=int, default=42)
    p_laws.add_argument("--law", default=None, help="check a single law by name")
    p_laws.set_defaults(func=_cmd_check_laws)

    p_monty = sub.add_parser("monty", help="play the three-door game")
    p_monty.add_argument("--strategy", choices=["stick", "switch", "both"], default="both")
    p_monty.set_defaults(func=_cmd_monty)

    p_version = sub.add_parser("version", help="print the package version")
    p_version.set_defaults(func=_cmd_version)

    return parser


def cli_main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
