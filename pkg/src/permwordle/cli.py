"""``permwordle`` command line.

Exit codes: 0 ok, 1 verification failure, 2 input or limit error,
3 no offender exists, 10 game loops forever, 11 game aborted.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from . import serialize
from .construct import ConstructionError, construct_general
from .game import OutcomeKind, StrategyError, Transcript, play
from .oracle import (
    STRATEGY_LIMIT,
    census,
    csl_sequence,
    default_workers,
    verify_theorem,
)
from .perm import LimitExceeded, PermutationError, format_permutation, parse_permutation

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_NO_OFFENDER = 3
EXIT_LOOP = 10
EXIT_ABORTED = 11


class InputError(Exception):
    pass


def _fmt_set(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}" if s else "{}"


def transcript_text(t: Transcript) -> str:
    n = len(t.secret)
    lines = [f"strategy: {t.strategy}", f"secret:   {format_permutation(t.secret)}", ""]
    width = max(len(format_permutation(r.guess)) for r in t.records)
    for r in t.records:
        incorrect = set(range(1, n + 1)) - r.correct_positions
        lines.append(
            f"guess {r.turn:>3} = {format_permutation(r.guess):<{width}}   "
            f"J = {_fmt_set(r.correct_positions):<{2 * n + 1}}   I = {_fmt_set(incorrect)}"
        )
    lines.append("")
    kind = t.outcome.kind
    if kind is OutcomeKind.SOLVED:
        lines.append(f"outcome: solved in {t.outcome.turn} guesses")
    elif kind is OutcomeKind.LOOP:
        lines.append(f"outcome: infinite loop, guess {t.outcome.turn} repeats an earlier guess")
    else:
        lines.append(f"outcome: aborted after {t.outcome.turn} guesses")
    if t.repetitions:
        lines.append("repeated incorrect information:")
        for e in t.repetitions:
            tail = " (loop continues forever)" if e.infinite else ""
            lines.append(
                f"  position {e.position}, value {e.value}, guesses {list(e.turns)}{tail}"
            )
    else:
        lines.append("no repeated incorrect information")
    return "\n".join(lines) + "\n"


def _emit(args, document: dict[str, Any], text: str) -> None:
    if args.output == "json":
        sys.stdout.write(serialize.dumps(document))
    else:
        sys.stdout.write(text)
    if args.report:
        Path(args.report).write_text(serialize.dumps(document))


def _strategy(args):
    if not args.strategy:
        raise InputError("--strategy is required")
    try:
        return serialize.parse_strategy(args.strategy)
    except (serialize.SpecError, StrategyError, PermutationError, ValueError) as exc:
        raise InputError(str(exc)) from None


def cmd_simulate(args) -> int:
    strategy = _strategy(args)
    if not args.secret:
        raise InputError("--secret is required for simulate")
    secret = parse_permutation(args.secret)
    t = play(secret, strategy, args.max_turns)
    _emit(args, serialize.transcript_to_dict(t), transcript_text(t))
    return {
        OutcomeKind.SOLVED: EXIT_OK,
        OutcomeKind.LOOP: EXIT_LOOP,
        OutcomeKind.ABORTED: EXIT_ABORTED,
    }[t.outcome.kind]


def cmd_construct(args) -> int:
    strategy = _strategy(args)
    built = construct_general(strategy)
    if built is None:
        sys.stderr.write("no offender: pure cyclic shift\n")
        return EXIT_NO_OFFENDER
    text = (
        f"omega: {format_permutation(built.omega)}\n"
        f"case:  {built.case.tag.value} {built.case.detail}\n\n" + transcript_text(built.evidence)
    )
    _emit(args, serialize.offender_to_dict(built), text)
    return EXIT_OK


def cmd_offenders(args) -> int:
    strategy = _strategy(args)
    c = census(strategy, keep_list=args.list_offenders, workers=args.threads)
    lines = [
        f"strategy: {strategy}",
        f"n = {c.n}, secrets = {sum(c.counts.values())}",
        f"clean {c.counts['clean']}, repeating {c.counts['repeating']}, looping {c.counts['looping']}",
        f"total offenders ({serialize.OFFENDER_DEFINITION}): {c.total_offenders}",
    ]
    if c.offenders is not None:
        lines += [f"  {format_permutation(s)} {v.value}" for s, v in c.offenders]
    document = serialize.census_to_dict(c)
    if args.output == "json":
        sys.stdout.write(serialize.dumps(document))
    else:
        sys.stdout.write("\n".join(lines) + "\n")
    if args.report:
        path = Path(args.report)
        path.write_text(serialize.census_table([c]) if path.suffix == ".csv" else serialize.dumps(document))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n is None:
        raise InputError("--n is required for verify")
    report = verify_theorem(args.n, limit=STRATEGY_LIMIT)
    lines = [
        f"n = {report.n}: {report.strategies_checked} strategies checked, "
        f"{len(report.failures)} failures",
        "pure shift offenders: " + ", ".join(f"{k} {v}" for k, v in report.cs_exceptions.items()),
        "construction cases: " + (", ".join(f"{k} {v}" for k, v in report.case_counts.items()) or "none"),
    ]
    for f in report.failures:
        lines.append(f"  FAIL {f.strategy}: {f.verdict}")
    _emit(args, serialize.theorem_report_to_dict(report), "\n".join(lines) + "\n")
    return EXIT_OK if report.holds else EXIT_FAILURE


def cmd_sequence(args) -> int:
    if args.max_n is None:
        raise InputError("--max-n is required for sequence")
    if args.max_n < 4:
        raise InputError("--max-n must be at least 4")
    terms = csl_sequence(args.max_n, workers=args.threads)
    document = {
        "strategy": "csl",
        "offender_definition": serialize.OFFENDER_DEFINITION,
        "terms": [{"n": n, "offenders": v} for n, v in zip(range(4, args.max_n + 1), terms)],
    }
    _emit(args, document, ", ".join(map(str, terms)) + "\n")
    return EXIT_OK


COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "simulate": cmd_simulate,
    "construct": cmd_construct,
    "offenders": cmd_offenders,
    "verify": cmd_verify,
    "sequence": cmd_sequence,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--strategy", help="strategy spec, e.g. cs:5 or inductive:right:[2,4,1,3]")
    common.add_argument("--secret", help="secret permutation literal, e.g. [4,1,5,2,3]")
    common.add_argument("--n", type=int, help="strategy length for verify")
    common.add_argument("--max-n", type=int, help="largest n for sequence")
    common.add_argument("--max-turns", type=int, default=None)
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--report", help="also write the structured report to this path")
    common.add_argument("--threads", type=int, default=default_workers(), help="worker processes")
    common.add_argument("--list-offenders", action="store_true")

    parser = argparse.ArgumentParser(prog="permwordle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except (InputError, PermutationError, StrategyError, LimitExceeded, ConstructionError, ValueError) as exc:
        sys.stderr.write(f"permwordle {args.command}: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
