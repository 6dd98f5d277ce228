"""Command-line interface: ``sgfree check|charpoly|certify|enumerate``.

Exit status: 0 free (or success), 1 non-free (or methods disagree),
2 usage, parse or bound error, 3 oracle disagreements during enumeration.

With ``--format lines`` every command prints one JSON object per line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import polynomial
from .arrangement import LatticeBoundError, char_poly_finite_field, char_poly_lattice
from .certificates import format_certificate
from .enumeration import dump_reproducers, run_enumeration
from .freeness import DIVISIONAL, decide_freeness, divisional_search, verify_certificate
from .graph import GraphError, GraphFormatError, SignedGraph, parse_graph_text

EXIT_FREE = 0
EXIT_NON_FREE = 1
EXIT_USAGE = 2
EXIT_DISAGREEMENT = 3

DEFAULT_MAX_VERTICES = 10
DEFAULT_MAX_ENUMERATE = 5

METHODS = {"lattice": ("lattice",), "finite-field": ("finite-field",), "ff": ("finite-field",), "both": ("lattice", "finite-field")}

HELP_EPILOG = """\
graph files:
  vertices N
  edge I J S      S is + (x_i - x_j), - (x_i + x_j) or +- (both)
  '#' starts a comment; blank lines are ignored.

exit status:
  0 free / success, 1 non-free / methods disagree,
  2 usage, parse or size-limit error, 3 enumeration disagreements.

environment:
  SGFREE_MAX_VERTICES  raises the vertex limits (checks: 10, lattice: 6,
                       enumerate: 5) without --force.
"""


class UsageError(Exception):
    pass


def parse_graph_file(path) -> SignedGraph:
    """Read a graph file; format errors carry the line (and column) number."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_graph_text(text)


def _env_limit() -> int | None:
    value = os.environ.get("SGFREE_MAX_VERTICES")
    if not value:
        return None
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"SGFREE_MAX_VERTICES must be an integer, got {value!r}") from None


def _guard(n: int, default: int, force: bool, what: str) -> None:
    limit = _env_limit() or default
    if n > limit and not force:
        raise UsageError(f"{what} is limited to {limit} vertices (got {n}); use --force or SGFREE_MAX_VERTICES")


class Printer:
    def __init__(self, fmt: str, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout

    def text(self, line: str = "") -> None:
        if self.fmt == "text":
            print(line, file=self.out)

    def record(self, **fields) -> None:
        if self.fmt == "lines":
            print(json.dumps(fields), file=self.out)


def _report_polys(G: SignedGraph, method: str, printer: Printer, force: bool = False) -> int:
    polys = {}
    for name in METHODS[method]:
        if name == "lattice":
            poly = char_poly_lattice(G, G.n if force else None)
        else:
            poly = char_poly_finite_field(G)
        polys[name] = poly
        printer.text(f"chi ({name}): {polynomial.format_poly(poly)}")
        printer.record(record="charpoly", method=name, coefficients=list(poly), polynomial=polynomial.format_poly(poly))
    if len(set(polys.values())) > 1:
        printer.text("methods DISAGREE")
        printer.record(record="agreement", agree=False)
        return EXIT_NON_FREE
    if len(polys) > 1:
        printer.text("methods agree")
        printer.record(record="agreement", agree=True)
    return EXIT_FREE


def _report_verdict(G: SignedGraph, printer: Printer, divisional: bool = False) -> int:
    verdict = decide_freeness(G)
    cert, basis = verdict.certificate, verdict.basis
    if divisional and verdict.free:
        cert, basis = divisional_search(G), DIVISIONAL
        if cert is None:
            raise AssertionError(f"free graph without a divisional chain: {G}")
    label = "FREE" if verdict.free else "NON-FREE"
    tree = format_certificate(cert)
    printer.text(label)
    printer.text(f"basis: {basis}")
    printer.text(tree)
    printer.record(record="verdict", free=verdict.free, basis=basis)
    for line in tree.splitlines():
        printer.record(record="certificate", line=line)
    if not verify_certificate(G, cert):
        raise AssertionError("produced certificate failed verification")
    return EXIT_FREE if verdict.free else EXIT_NON_FREE


def run_check(args, printer: Printer) -> int:
    G = parse_graph_file(args.file)
    _guard(G.n, DEFAULT_MAX_VERTICES, args.force, "check")
    status = _report_verdict(G, printer)
    if args.method:
        if _report_polys(G, args.method, printer, args.force) != EXIT_FREE:
            return EXIT_NON_FREE
    return status


def run_charpoly(args, printer: Printer) -> int:
    G = parse_graph_file(args.file)
    return _report_polys(G, args.method, printer, args.force)


def run_certify(args, printer: Printer) -> int:
    G = parse_graph_file(args.file)
    _guard(G.n, DEFAULT_MAX_VERTICES, args.force, "certify")
    return _report_verdict(G, printer, divisional=args.divisional)


def run_enumerate(args, printer: Printer) -> int:
    n = args.n
    if n < 2:
        raise UsageError("enumerate needs at least 2 vertices")
    _guard(n, DEFAULT_MAX_ENUMERATE, args.force, "enumerate")
    report = run_enumeration(n, reduce=args.reduce_switching_iso, workers=args.workers)
    for line in report.lines():
        printer.text(line)
        key, _, value = line.rpartition(" ")
        printer.record(record="count", key=key, value=int(value))
    if report.disagreements:
        paths = dump_reproducers(n, report.disagreements, args.dump_dir)
        for path in paths:
            printer.text(f"reproducer {path}")
            printer.record(record="reproducer", path=str(path))
        return EXIT_DISAGREEMENT
    return EXIT_FREE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgfree",
        description="Decide freeness of signed-graphic hyperplane arrangements.",
        epilog=HELP_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--format", choices=("text", "lines"), default="text", help="text (default) or one JSON record per line")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide freeness and print the certificate or witness")
    p.add_argument("file")
    p.add_argument("--method", choices=sorted(METHODS), help="also print the characteristic polynomial")
    p.add_argument("--force", action="store_true", help="ignore the vertex limit")
    p.set_defaults(run=run_check)

    p = sub.add_parser("charpoly", help="print the characteristic polynomial")
    p.add_argument("file")
    p.add_argument("--method", choices=sorted(METHODS), default="both")
    p.add_argument("--force", action="store_true", help="ignore the lattice size limit")
    p.set_defaults(run=run_charpoly)

    p = sub.add_parser("certify", help="print a verified certificate")
    p.add_argument("file")
    p.add_argument("--divisional", action="store_true", help="certify free graphs by a divisional chain")
    p.add_argument("--force", action="store_true", help="ignore the vertex limit")
    p.set_defaults(run=run_certify)

    p = sub.add_parser("enumerate", help="cross-check every signed graph on N vertices")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("--force", action="store_true", help="allow N above 5")
    p.add_argument("--reduce-switching-iso", action="store_true", help="one graph per switching-isomorphism class")
    p.add_argument("--workers", type=int, default=None, help="worker processes (default: CPU count, at most 8)")
    p.add_argument("--dump-dir", default="sgfree-reproducers", help="where disagreeing graphs are written")
    p.set_defaults(run=run_enumerate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    printer = Printer(args.format)
    try:
        return args.run(args, printer)
    except GraphFormatError as exc:
        print(f"sgfree: {args.file}: {exc}", file=sys.stderr)
    except (UsageError, GraphError, LatticeBoundError) as exc:
        print(f"sgfree: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
