"""Command line front end: ``search``, ``freq``, ``bench`` and ``probe``.

Exit status is 0 on success, 1 on I/O errors and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import binascii
import sys

from .baselines import BaselineConfigError, sbndm_search
from .bench import ALGORITHMS, M_VALUES, BenchPlan, emit_csv, emit_plot_data, run_benchmark, write_csv
from .block_compare import WidthUnavailable, best_width, capability_probe
from .corpus import FIXTURES, load_corpus, load_fixture
from .matchers import configure, search
from .orders import ORDER_KINDS, FrequencyTable, FrequencyTableFormatError


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blockmatch", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("search", help="count or report occurrences of a pattern")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("-p", "--pattern", help="pattern given literally")
    src.add_argument("--pattern-file", help="read the pattern bytes from a file")
    s.add_argument("--hex", action="store_true", help="the -p pattern is hexadecimal")
    s.add_argument("-t", "--text", required=True, help="file to search")
    s.add_argument("-a", "--algorithm", default="block",
                   choices=("block", "naive", "sbndm2", "sbndm4"))
    s.add_argument("-w", "--width", type=int, choices=(8, 16, 32),
                   help="block width (default: widest available)")
    s.add_argument("-o", "--order", choices=ORDER_KINDS,
                   help="comparison order (default: freq with a table, else pih)")
    s.add_argument("--freq-table", help="frequency table file for --order freq")
    s.add_argument("--freq-from-text", action="store_true",
                   help="build the frequency table from the searched text")
    s.add_argument("-r", "--peel", type=int, help="peeling factor (default: by alphabet and order)")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print the count only (default)")
    mode.add_argument("--report", action="store_true", help="also print 1-based positions")

    f = sub.add_parser("freq", help="build a byte frequency table")
    f.add_argument("-t", "--text", required=True, help="training corpus")
    f.add_argument("-O", "--output", help="output file (default: standard output)")

    b = sub.add_parser("bench", help="run the timing harness")
    b.add_argument("corpora", nargs="*",
                   help=f"corpus files (default: bundled fixtures {', '.join(FIXTURES)})")
    b.add_argument("--algorithms", default=",".join(ALGORITHMS))
    b.add_argument("--m", default=",".join(map(str, M_VALUES)), help="pattern lengths")
    b.add_argument("--runs", type=int, default=30)
    b.add_argument("--patterns", type=int, default=1, help="sampled patterns per cell")
    b.add_argument("--seed", type=int, default=1)
    b.add_argument("-O", "--output", help="CSV file (default: standard output)")
    b.add_argument("--plot-dir", help="also write one plot-data file per corpus here")

    sub.add_parser("probe", help="print the available block widths")
    return parser


def _read_pattern(args) -> bytes:
    if args.pattern_file:
        with open(args.pattern_file, "rb") as fh:
            pattern = fh.read()
    elif args.hex:
        try:
            pattern = binascii.unhexlify(args.pattern)
        except (binascii.Error, ValueError) as exc:
            raise UsageError(f"bad hex pattern: {exc}") from None
    else:
        pattern = args.pattern.encode("utf-8", "surrogateescape")
    if not pattern:
        raise UsageError("the pattern is empty")
    return pattern


def _search(args, out) -> None:
    pattern = _read_pattern(args)
    with open(args.text, "rb") as fh:
        text = fh.read()
    if args.algorithm.startswith("sbndm"):
        if args.report:
            raise UsageError("SBNDM baselines only count")
        try:
            print(sbndm_search(pattern, text, int(args.algorithm[-1])).count, file=out)
        except BaselineConfigError as exc:
            raise UsageError(str(exc)) from None
        return

    table = None
    if args.freq_table:
        table = FrequencyTable.load(args.freq_table)
    elif args.freq_from_text:
        table = FrequencyTable.from_text(text)
    order = args.order or ("freq" if table is not None else "pih")
    if order == "freq" and table is None:
        raise UsageError("--order freq needs --freq-table or --freq-from-text")
    if args.algorithm == "naive":
        width = None
    else:
        width = args.width or best_width()
    try:
        cfg = configure(pattern, width=width, order=order, table=table, peel_r=args.peel,
                        alphabet_size=len(set(text)), mode="report" if args.report else "count")
    except WidthUnavailable as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = search(pattern, text, cfg)
    print(report.count, file=out)
    if report.positions is not None:
        for pos in report.positions:
            print(pos, file=out)


def _freq(args, out) -> None:
    with open(args.text, "rb") as fh:
        table = FrequencyTable.from_text(fh.read())
    if args.output:
        table.save(args.output)
    else:
        for byte, count in enumerate(table.counts):
            print(byte, count, file=out)


def _bench(args, out) -> None:
    try:
        m_values = tuple(int(x) for x in args.m.split(","))
    except ValueError:
        raise UsageError(f"bad --m list {args.m!r}") from None
    algorithms = tuple(a for a in args.algorithms.split(",") if a)
    corpora = [load_corpus(p) for p in args.corpora] or [load_fixture(n) for n in FIXTURES]
    plan = BenchPlan(corpora, algorithms, m_values, args.runs, args.seed, args.patterns)
    try:
        records = run_benchmark(plan)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.output:
        emit_csv(records, args.output)
    else:
        write_csv(records, out)
    if args.plot_dir:
        emit_plot_data(records, args.plot_dir)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "search":
            _search(args, out)
        elif args.command == "freq":
            _freq(args, out)
        elif args.command == "bench":
            _bench(args, out)
        elif args.command == "probe":
            print(" ".join(str(w) for w in sorted(capability_probe())), file=out)
    except UsageError as exc:
        print(f"blockmatch: {exc}", file=sys.stderr)
        return 2
    except FrequencyTableFormatError as exc:
        print(f"blockmatch: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"blockmatch: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
