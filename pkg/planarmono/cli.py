"""Command-line entry point: ``planarmono <command> [options]``.

Searches and verification reports go to standard output as JSON lines, the
slope scan as CSV; logging goes to standard error. The exit code is 0 exactly
when nothing failed and no mismatch was found.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import IO, Any, Callable, Dict, List, Optional, Sequence

from . import formats
from .exceptional import DEFAULT_K_MAX
from .exceptions import PlanarmonoError
from .gf import DEFAULT_FIELD_CAP
from .planar import DEFAULT_SEARCH_CAP
from .types import IdentityReport
from .verifiers import Verifier, all_passed

LOG = logging.getLogger(__name__)

Command = Callable[[argparse.Namespace, Verifier, IO[str]], int]


def _emit_reports(reports: List[IdentityReport], out: IO[str]) -> int:
    formats.JSONL.write(reports, out)
    return 0 if all_passed(reports) else 1


def cmd_search_planar(
    args: argparse.Namespace, verifier: Verifier, out: IO[str]
) -> int:
    mismatches = 0
    for report in verifier.planar.search(args.max_q, include_all=args.all_classes):
        formats.JSONL.write([report], out)
        mismatches += len(report["mismatches"])
    if mismatches:
        LOG.warning("%d planar exponent(s) outside the families", mismatches)
    return 0 if mismatches == 0 else 1


def cmd_verify_identities(
    args: argparse.Namespace, verifier: Verifier, out: IO[str]
) -> int:
    return _emit_reports(verifier.identities.run(), out)


def cmd_verify_lemmas(
    args: argparse.Namespace, verifier: Verifier, out: IO[str]
) -> int:
    return _emit_reports(verifier.lemmas.run(), out)


def cmd_verify_exceptional(
    args: argparse.Namespace, verifier: Verifier, out: IO[str]
) -> int:
    return _emit_reports(verifier.exceptional.run(), out)


def cmd_verify_planar(
    args: argparse.Namespace, verifier: Verifier, out: IO[str]
) -> int:
    return _emit_reports(verifier.planar.run(args.max_q), out)


def cmd_verify_hyperovals(
    args: argparse.Namespace, verifier: Verifier, out: IO[str]
) -> int:
    return _emit_reports(verifier.hyperovals.run(), out)


def cmd_check_hyperoval(
    args: argparse.Namespace, verifier: Verifier, out: IO[str]
) -> int:
    report = verifier.hyperovals.check(args.k, args.t)
    formats.JSONL.write([report], out)
    return 0


def cmd_sb_scan(
    args: argparse.Namespace, verifier: Verifier, out: IO[str]
) -> int:
    formats.SCAN_CSV.write(verifier.hyperovals.scan(args.t_max), out)
    return 0


def cmd_summarize(
    args: argparse.Namespace, verifier: Verifier, out: IO[str]
) -> int:
    totals: Dict[int, int] = {}
    for report in formats.load_reports(args.file):
        totals[report["q"]] = totals.get(report["q"], 0) + len(report["mismatches"])
    rows = [{"q": q, "mismatches": n} for q, n in sorted(totals.items())]
    formats.CsvHandler(["q", "mismatches"]).write(rows, out)
    return 0 if not any(totals.values()) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planarmono",
        description="Verify the classification of planar monomials.",
    )
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG level")
    parser.add_argument(
        "--parallel", type=int, default=1, metavar="N", help="worker processes"
    )
    parser.add_argument(
        "--cap", type=int, default=DEFAULT_FIELD_CAP, help="largest field order built"
    )
    parser.add_argument(
        "--k-max", type=int, default=DEFAULT_K_MAX, help="extension degrees scanned"
    )
    parser.add_argument(
        "--seed", type=int, default=0, help="seed for randomized checks"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Command, summary: str) -> argparse.ArgumentParser:
        command = sub.add_parser(name, help=summary)
        command.set_defaults(func=func)
        return command

    search = add("search-planar", cmd_search_planar, "exhaustive planar search")
    search.add_argument("--max-q", type=int, required=True)
    search.add_argument(
        "--all-classes", action="store_true", help="list non-planar classes too"
    )
    add("verify-identities", cmd_verify_identities, "exact polynomial identities")
    add("verify-lemmas", cmd_verify_lemmas, "Lucas and odd-composition lemmas")
    add("verify-exceptional", cmd_verify_exceptional, "exceptionality cross-checks")
    planar = add("verify-planar", cmd_verify_planar, "classification invariants")
    planar.add_argument("--max-q", type=int, default=None)
    add("verify-hyperovals", cmd_verify_hyperovals, "monomial hyperoval checks")
    hyperoval = add("check-hyperoval", cmd_check_hyperoval, "scan D(x^t) over GF(2^k)")
    hyperoval.add_argument("k", type=int)
    hyperoval.add_argument("t", type=int)
    scan = add("sb-scan", cmd_sb_scan, "slope coefficient scan as CSV")
    scan.add_argument("--t-max", type=int, default=100)
    summarize = add("summarize", cmd_summarize, "mismatch totals of a search file")
    summarize.add_argument("file")
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[IO[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    out = out or sys.stdout
    try:
        verifier = Verifier(
            args.parallel,
            cap=args.cap,
            k_max=args.k_max,
            seed=args.seed,
            search_cap=min(args.cap, DEFAULT_SEARCH_CAP),
        )
        func: Any = args.func
        return func(args, verifier, out)
    except (PlanarmonoError, ValueError) as e:
        LOG.error("%s: %s", args.command, e)
        return 2


if __name__ == "__main__":
    sys.exit(main())
