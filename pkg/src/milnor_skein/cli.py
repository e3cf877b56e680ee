"""Command-line entry point.

Exit codes: 0 ok, 1 bad input, 2 resource guard hit, 3 an identity
failed, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .diagram import Diagram, loose_crossings, parse_events, parse_gauss
from .errors import ConsistencyError, DiagramError, ResourceError, SplitError
from .group_words import DEFAULT_MAX_TERMS
from .invariants import METHODS, MuTable, mu, mu_table
from .meridians import DEFAULT_MAX_LETTERS, loose_closure_series
from .multilinear import format_series
from . import skein
from .suites import all_seqs, run_all

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_RESOURCE = 2
EXIT_FAILED = 3
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_input(path: str, fmt: str | None) -> Diagram:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    if fmt is None:
        if path.endswith((".events.json", ".events")):
            fmt = "events"
        elif path.endswith((".gauss.json", ".gauss")):
            fmt = "gauss"
        else:
            try:
                fmt = "events" if "events" in json.loads(text) else "gauss"
            except (json.JSONDecodeError, TypeError):
                fmt = "gauss"
    return parse_events(text) if fmt == "events" else parse_gauss(text)


def _parse_seq(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError as exc:
        raise DiagramError(f"bad --seq {text!r}: {exc}") from exc


def run_compute(args: argparse.Namespace) -> int:
    d = _read_input(args.input, args.format)
    rmax = d.n if args.rmax is None else args.rmax
    if not 0 <= rmax <= d.n:
        raise DiagramError(f"--rmax must lie in 0..{d.n}")
    if args.method == "magnus":
        table = mu_table(d, rmax)
    else:
        table = MuTable(rmax)
        for seq in all_seqs(d, rmax):
            table.entries[seq] = mu(
                d, seq, args.method, max_terms=args.guard_terms, max_letters=args.guard_letters
            )
    sys.stdout.write(table.to_tsv())
    return EXIT_OK


def run_expand(args: argparse.Namespace) -> int:
    d = _read_input(args.input, args.format)
    if d.loose is None:
        raise DiagramError("diagram has no loose component")
    print(format_series(loose_closure_series(d)))
    return EXIT_OK


def run_verify_skein(args: argparse.Namespace) -> int:
    d = _read_input(args.input, args.format)
    met = dict(loose_crossings(d))
    if args.all:
        crossings = list(met)
    else:
        if args.crossing not in met:
            raise SplitError(f"crossing {args.crossing!r} is not a loose-arc crossing with L")
        crossings = [args.crossing]
    seq = _parse_seq(args.seq)
    ok = True
    for cid in crossings:
        if seq is not None:
            seqs = [seq]
        else:
            seqs = [s for s in all_seqs(d) if met[cid] in s]
        for s in seqs:
            rep = skein.skein_sides(d, cid, s)
            print(json.dumps(rep.to_dict(), sort_keys=True))
            ok = ok and rep.holds
    return EXIT_OK if ok else EXIT_FAILED


def run_random_suite(args: argparse.Namespace) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    summary = run_all(args.seed, args.trials)
    print(json.dumps(summary, indent=2, sort_keys=True))
    return EXIT_OK if summary["failures"] == 0 else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="milnor-skein", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("input", help="diagram file, or - for stdin")
        p.add_argument("--format", choices=("gauss", "events"), default=None)
        p.add_argument("--guard-terms", type=int, default=DEFAULT_MAX_TERMS)
        p.add_argument("--guard-letters", type=int, default=DEFAULT_MAX_LETTERS)
        return p

    p = with_input(sub.add_parser("compute", help="print the mu-table as TSV"))
    p.add_argument("--method", choices=METHODS, default="magnus")
    p.add_argument("--rmax", type=int, default=None)
    p.set_defaults(func=run_compute)

    p = with_input(sub.add_parser("expand", help="print the Magnus image of the loose closure"))
    p.set_defaults(func=run_expand)

    p = with_input(sub.add_parser("verify-skein", help="check the crossing-change formula"))
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--crossing")
    group.add_argument("--all", action="store_true")
    p.add_argument("--seq", help='index sequence, e.g. "1 2"')
    p.set_defaults(func=run_verify_skein)

    p = sub.add_parser("random-suite", help="run the seeded property suites")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=run_random_suite)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"milnor-skein: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"milnor-skein: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (DiagramError, SplitError, ValueError, OSError, ConsistencyError) as exc:
        print(f"milnor-skein: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
