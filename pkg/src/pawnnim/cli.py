"""Command-line front end.

Subcommands: eval (component value and per-move classes), scan
(exhaustive distribution / first-occurrence sweeps), periodic (periodic
pattern runs with period detection), oracle (raw game-tree checks),
tables (recompute built-in regression tables and diff), embed (chessboard
diagrams).

Exit status: 0 on success, 1 when a computation disagrees with a built-in
table or an invariant fails, 2 for usage or validation errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__, engine, experiments, grundy, oracle, reference
from .embed import EmbedError, embed as build_diagram, render
from .words import PeriodicPattern, Word, validate

OK, MISMATCH, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("PAWNNIM_WORKERS", "1")))
    except ValueError:
        return 1


def _parse_word(text: str) -> Word:
    try:
        w = Word(text)
    except ValueError as exc:
        raise UsageError(str(exc))
    if not w.is_valid:
        raise UsageError(
            f"invalid word {text!r}: adjacent stopped files at index "
            f"{validate(w)}")
    return w


def _out_stream(path: str):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


# -- subcommand handlers ----------------------------------------------------

def cmd_eval(args) -> int:
    word = _parse_word(args.word)
    table = grundy.GrundyTable()
    value = grundy.epsilon(word, table)
    print(f"epsilon({word}) = {value}")
    if args.moves:
        for k in range(len(word)):
            cls = engine.classify_move(word, k, table)
            text = "loony" if cls.is_loony else f"value {cls.value}"
            print(f"file {k + 1}: {text}")
    return OK


def cmd_scan(args) -> int:
    tables = experiments.ScanTables(workers=args.workers)
    if args.distribution:
        row = experiments.value_distribution(args.length, tables)
        result = row
    else:
        result = experiments.first_occurrence(args.max_k, args.length, tables)
        missing = [k for k in range(1, args.max_k + 1)
                   if k not in result.lengths]
        if missing:
            print(f"values not reached by length {args.length}: {missing}",
                  file=sys.stderr)
    fh, close = _out_stream(args.output)
    try:
        experiments.write_report(result, args.format, fh)
    finally:
        if close:
            fh.close()
    return OK


def cmd_periodic(args) -> int:
    stopped = frozenset(int(r) for r in args.stopped.split(",") if r != "")
    try:
        pattern = PeriodicPattern(args.period, stopped, args.origin)
    except ValueError as exc:
        raise UsageError(str(exc))
    result = experiments.periodic_scan(pattern, args.max_length,
                                       detect=args.detect_period)
    fh, close = _out_stream(args.output)
    try:
        experiments.write_report(result, args.format, fh)
    finally:
        if close:
            fh.close()
    if args.powers_of_two:
        for power, length in sorted(result.milestones.items()):
            print(f"first *{power} at length {length}", file=sys.stderr)
    if args.detect_period:
        rep = result.report
        if rep is None:
            print("no period found in computed range", file=sys.stderr)
        else:
            state = "verified" if rep.verified else "observed"
            print(f"period {rep.period} after preperiod {rep.preperiod} "
                  f"({state}, window {rep.window[0]}..{rep.window[1]})",
                  file=sys.stderr)
    return OK


def cmd_oracle(args) -> int:
    word = _parse_word(args.word)
    try:
        value = oracle.oracle_epsilon(word, args.max_heap)
    except oracle.NonUniqueHeapError as exc:
        print(f"oracle failure: {exc}", file=sys.stderr)
        return MISMATCH
    print(f"oracle epsilon({word}) = {value}")
    if args.check_loony:
        table = grundy.GrundyTable()
        status = OK
        for k in range(len(word)):
            orc = oracle.oracle_is_loony(word, k, args.max_heap)
            eng = engine.classify_move(word, k, table).is_loony
            agree = "" if orc == eng else "  << disagrees with engine"
            if orc != eng:
                status = MISMATCH
            print(f"file {k + 1}: {'loony' if orc else 'not loony'}{agree}")
        return status
    return OK


def cmd_tables(args) -> int:
    which = args.which
    if which == "thm2":
        table = grundy.GrundyTable()
        limit = 2000
        grundy.epsilon(Word("0" * limit), table)  # fills all shorter runs
        bad = [m for m in range(limit + 1)
               if grundy.epsilon(Word("0" * m), table)
               != grundy.epsilon_plain(m)]
        return _verdict("thm2", f"recursion vs closed form to m={limit}",
                        not bad)
    if which == "first-occurrence":
        maxk = reference.FIRST_OCCURRENCE_DEFAULT_MAX
        expected = {k: reference.FIRST_OCCURRENCE_LENGTHS[k]
                    for k in range(1, maxk + 1)}
        found = experiments.first_occurrence(
            maxk, max(expected.values()),
            experiments.ScanTables(workers=args.workers))
        return _verdict("first-occurrence", f"least lengths for 1..{maxk}",
                        dict(sorted(found.lengths.items())) == expected)
    if which == "distribution35":
        expected = reference.DISTRIBUTION_PERCENT_2SF[35]
        row = experiments.value_distribution(
            35, experiments.ScanTables(workers=args.workers))
        got = [experiments.two_sig_figs(100.0 * row.counts.get(v, 0)
                                        / row.total)
               for v in range(10)]
        return _verdict("distribution35", f"{got} vs {expected}",
                        got == expected)
    if which == "p6":
        alpha_max = args.alpha_max or reference.P6_DEFAULT_MAX_ALPHA
        expected = {2 ** a: reference.P6_MILESTONES[a]
                    for a in range(3, alpha_max + 1)}
        pattern = PeriodicPattern(6, frozenset({4}))
        scan = experiments.periodic_scan(pattern,
                                         max(expected.values()) + 1,
                                         detect=False)
        got = {p: scan.milestones.get(p) for p in expected}
        return _verdict("p6", f"{got} vs {expected}", got == expected)
    raise UsageError(f"unknown table {which!r}")


def _verdict(name: str, detail: str, ok: bool) -> int:
    print(f"{name}: {'PASS' if ok else 'FAIL'} ({detail})")
    return OK if ok else MISMATCH


def cmd_embed(args) -> int:
    comps = [_parse_word(t) for t in args.words.split(",") if t]
    if not comps:
        raise UsageError("need at least one component word")
    try:
        diag = build_diagram(comps, args.height, args.width)
    except EmbedError as exc:
        raise UsageError(str(exc))
    text = render(diag, args.format)
    fh, close = _out_stream(args.output)
    try:
        fh.write(text + "\n")
    finally:
        if close:
            fh.close()
    return OK


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pawnnim",
        description="Nim values and experiments for the pawns game with "
                    "stopped files")
    parser.add_argument("--version", action="version",
                        version=f"pawnnim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="value of one component word")
    p.add_argument("word")
    p.add_argument("--moves", action="store_true",
                   help="also classify the move on every file")
    p.set_defaults(func=cmd_eval)

    def add_output(sp, formats=None):
        sp.add_argument("--output", default="-", metavar="PATH",
                        help="output file, '-' for standard output")
        if formats:
            sp.add_argument("--format", choices=formats, default=formats[0])

    def add_workers(sp):
        sp.add_argument("--workers", type=int, default=_default_workers(),
                        help="scan worker threads (default from "
                             "PAWNNIM_WORKERS)")

    p = sub.add_parser("scan", help="exhaustive sweep over all words")
    p.add_argument("--length", type=int, required=True, metavar="M")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--distribution", action="store_true",
                       help="value counts over all words of length M")
    group.add_argument("--first-occurrence", action="store_true",
                       help="least lengths attaining 1..K, scanning to M")
    p.add_argument("--max-k", type=int, default=4, metavar="K")
    add_output(p, ["csv", "jsonl"])
    add_workers(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("periodic", help="periodic stopping-pattern run")
    p.add_argument("--period", type=int, required=True)
    p.add_argument("--stopped", default="",
                   help="comma-separated stopped residues mod the period")
    p.add_argument("--origin", type=int, default=1,
                   help="file number of the first component file")
    p.add_argument("--max-length", type=int, required=True)
    p.add_argument("--powers-of-two", action="store_true",
                   help="report the least length per power-of-two value")
    p.add_argument("--detect-period", action="store_true")
    add_output(p, ["csv", "jsonl"])
    p.set_defaults(func=cmd_periodic)

    p = sub.add_parser("oracle", help="raw game-tree checks")
    p.add_argument("--word", required=True)
    p.add_argument("--max-heap", type=int, default=3, metavar="J")
    p.add_argument("--check-loony", action="store_true",
                   help="test every move against the classification engine")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("tables",
                       help="recompute a built-in table and diff it")
    p.add_argument("--which", required=True,
                   choices=["thm2", "first-occurrence", "distribution35",
                            "p6"])
    p.add_argument("--alpha-max", type=int, default=0,
                   help="p6 only: highest power-of-two exponent to check")
    add_workers(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("embed", help="chessboard diagram for components")
    p.add_argument("--words", required=True,
                   help="comma-separated component words")
    p.add_argument("--height", type=int, default=9)
    p.add_argument("--width", type=int, default=12)
    p.add_argument("--format", choices=["ascii", "fen"], default="ascii")
    p.add_argument("--output", default="-", metavar="PATH",
                   help="output file, '-' for standard output")
    p.set_defaults(func=cmd_embed)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except oracle.ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return MISMATCH


if __name__ == "__main__":
    sys.exit(main())
