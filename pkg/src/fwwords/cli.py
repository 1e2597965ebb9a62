"""Command-line front end.

Exit codes: 0 success, 1 self-test failure, 2 usage or input error. All
output is deterministic; `ints` and `dense` word renderings are bit-exact
with a single trailing newline.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import DEFAULT_ORACLE_GUARD, run_bench
from .oracle import fw_oracle
from .periods import PeriodSet
from .reduction import ReductionChain, extremal_length, fw_fast, letter_at, reduction_chain
from .selftest import DEFAULT_MAX_N, DEFAULT_MAX_PERIOD, run_selftest
from .words import Word, alphabet, is_trivial

DENSE_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def _parse_periods(text: str) -> PeriodSet:
    return PeriodSet(int(part) for part in text.split(","))


def _render_dense(w: Word) -> str:
    if any(letter >= len(DENSE_DIGITS) for letter in w):
        raise ValueError("AlphabetTooLargeForDense: dense mode needs every letter below 36")
    return "".join(DENSE_DIGITS[letter] for letter in w)


def render_chain(chain: ReductionChain) -> str:
    """One line per step, `Qi={...} ni=<len>`, then the termination tag."""
    lines = [f"Q{idx}={ps} n{idx}={length}" for idx, (ps, length) in enumerate(chain.steps)]
    lines.append(chain.termination.value)
    return "\n".join(lines)


def _cmd_word(args: argparse.Namespace) -> int:
    ps = _parse_periods(args.periods)
    build = fw_oracle if args.engine == "oracle" else fw_fast
    w = build(ps, args.length)
    if args.format == "ints":
        print(" ".join(str(letter) for letter in w))
    elif args.format == "dense":
        print(_render_dense(w))
    else:
        print(
            json.dumps(
                {
                    "periods": list(ps.periods),
                    "length": args.length,
                    "letters": list(w),
                    "alphabet_size": len(alphabet(w)),
                    "trivial": is_trivial(w, ps),
                }
            )
        )
    return 0


def _cmd_at(args: argparse.Namespace) -> int:
    ps = _parse_periods(args.periods)
    print(letter_at(ps, args.length, args.index))
    return 0


def _cmd_extremal(args: argparse.Namespace) -> int:
    value = extremal_length(_parse_periods(args.periods))
    print("none" if value is None else value)
    return 0


def _cmd_chain(args: argparse.Namespace) -> int:
    print(render_chain(reduction_chain(_parse_periods(args.periods), args.length)))
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    report = run_selftest(args.max_period, args.max_n)
    for line in report.lines():
        print(line)
    return 0 if report.ok else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    ps = _parse_periods(args.periods)
    rows = run_bench(ps, args.length, args.repetitions, args.oracle_guard)
    if args.format == "json":
        print(json.dumps({"rows": [row.as_dict() for row in rows]}))
    else:
        for row in rows:
            print(row.render())
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fwwords",
        description="Maximal-alphabet words for a prescribed set of periods.",
    )
    sub = parser.add_subparsers(required=True, metavar="command")

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("word", _cmd_word, "print the whole word for the given periods and length")
    p.add_argument("--periods", required=True, help="comma-separated positive integers, e.g. 5,7")
    p.add_argument("--length", required=True, type=int)
    p.add_argument("--format", choices=("ints", "dense", "json"), default="ints")
    p.add_argument("--engine", choices=("fast", "oracle"), default="fast")

    p = add("at", _cmd_at, "print one letter of the word without building it")
    p.add_argument("--periods", required=True)
    p.add_argument("--length", required=True, type=int)
    p.add_argument("--index", required=True, type=int)

    p = add("extremal", _cmd_extremal, "print the largest non-trivial length, or 'none'")
    p.add_argument("--periods", required=True)

    p = add("chain", _cmd_chain, "print the reduction chain and its termination tag")
    p.add_argument("--periods", required=True)
    p.add_argument("--length", required=True, type=int)

    p = add("selftest", _cmd_selftest, "cross-check the engines on a small exhaustive grid")
    p.add_argument("--max-period", type=int, default=DEFAULT_MAX_PERIOD)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)

    p = add("bench", _cmd_bench, "time the engines (report only)")
    p.add_argument("--periods", required=True)
    p.add_argument("--length", required=True, type=int)
    p.add_argument("--repetitions", type=int, default=5)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument(
        "--oracle-guard",
        type=int,
        default=DEFAULT_ORACLE_GUARD,
        help="skip the oracle build above this many positions",
    )

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors and --help itself
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
