"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 enumeration budget or count overflow.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from wheelcensus.census import GOLDEN_PSI, build_table, export_representatives, psi_enumerated, verify_all
from wheelcensus.counting import bracelets, has_closed_form, necklaces, psi_closed
from wheelcensus.distance import check_key_lemma
from wheelcensus.errors import BudgetExceededError, CountOverflowError, NoClosedFormError

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_count(args) -> int:
    fn = necklaces if args.kind == "necklace" else bracelets
    _emit(f"{fn(args.n, args.k)}\n", args.output)
    return EXIT_OK


def cmd_psi(args) -> int:
    method = args.method
    if method is None:
        method = "closed" if args.n >= 4 and 0 <= args.p <= args.n and has_closed_form(args.p, args.n) else "enumerate"
    if method == "closed":
        _emit(f"{psi_closed(args.p, args.n)}\n", args.output)
        return EXIT_OK
    if method == "enumerate":
        _emit(f"{psi_enumerated(args.p, args.n)}\n", args.output)
        return EXIT_OK
    closed = _non_enumerative_psi(args.p, args.n)
    enumerated = psi_enumerated(args.p, args.n)
    _emit(f"{closed}, {enumerated}\n", args.output)
    return EXIT_OK if closed == enumerated else EXIT_MISMATCH


def _non_enumerative_psi(p: int, n: int) -> int:
    """Closed form where one exists, else the reference table value for n <= 10."""
    try:
        return psi_closed(p, n)
    except NoClosedFormError:
        if n in GOLDEN_PSI:
            return GOLDEN_PSI[n][p]
        raise


def cmd_table(args) -> int:
    table = build_table(args.min_n, args.max_n)
    render = {"csv": table.to_csv, "md": table.to_markdown, "json": table.to_json}[args.format]
    _emit(render(), args.output)
    return EXIT_OK if table.ok else EXIT_MISMATCH


def cmd_enumerate(args) -> int:
    docs = export_representatives(args.n, args.p, args.format)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for doc in docs:
            (out / doc.name).write_text(doc.content)
        print(f"wrote {len(docs)} {args.format} files to {out}")
    else:
        sys.stdout.write("".join(doc.content for doc in docs))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_all(args.max_n)
    text = json.dumps(report.to_dict(), indent=2) + "\n" if args.format == "json" else report.to_text()
    _emit(text, args.output)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_distance_lemma(args) -> int:
    report = check_key_lemma(args.n, args.p)
    _emit(json.dumps(report.to_dict(), indent=2) + "\n", args.output)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wheelcensus",
        description="Exact census of signed wheels up to switching isomorphism.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, description=help)
        p.set_defaults(func=func)
        return p

    p = add("count", cmd_count, "Count k-ary necklaces or bracelets of length n.")
    p.add_argument("--kind", choices=["necklace", "bracelet"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("-o", "--output", help="write to this file instead of stdout")

    p = add("psi", cmd_psi, "Number of classes with exactly p negative rim edges.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument(
        "--method",
        choices=["closed", "enumerate", "both"],
        help="default: closed form when one exists, enumeration otherwise",
    )
    p.add_argument("-o", "--output")

    p = add("table", cmd_table, "Table of psi_p(n) with column sums psi(n).")
    p.add_argument("--min-n", type=int, default=4)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=["csv", "md", "json"], default="csv")
    p.add_argument("-o", "--output")

    p = add("enumerate", cmd_enumerate, "Export one representative per class.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--out", help="directory receiving one file per class")

    p = add("verify", cmd_verify, "Run every cross-check up to max-n.")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("-o", "--output")

    p = add("distance-lemma", cmd_distance_lemma, "Check whether distance tuples separate classes.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("-o", "--output")
    return parser


def _flags(args) -> str:
    keys = ("n", "p", "k", "min_n", "max_n")
    shown = [f"--{k.replace('_', '-')} {getattr(args, k)}" for k in keys if hasattr(args, k)]
    return " ".join(shown)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (BudgetExceededError, CountOverflowError) as exc:
        print(f"wheelcensus {args.command}: limit exceeded ({_flags(args)}): {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (NoClosedFormError, ValueError) as exc:
        print(f"wheelcensus {args.command}: invalid arguments ({_flags(args)}): {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
