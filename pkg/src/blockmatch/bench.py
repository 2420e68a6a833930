"""Timing harness: corpora x algorithms x pattern lengths.

Every cell samples its patterns once, cross-checks the expected occurrence
total with the brute-force oracle, then times each algorithm ``runs`` times
after one untimed warm-up.  Times are wall-clock (``time.perf_counter``) in
milliseconds per pattern search.
"""
from __future__ import annotations

import csv
import os
import re
import statistics
import time
import zlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Sequence

from .baselines import sbndm_search
from .block_compare import capability_probe
from .core import oracle_count
from .corpus import RNG_NAME, Corpus, build_frequency_table, sample_patterns
from .matchers import SearchConfig, configure, search
from .orders import FrequencyTable

ALGORITHMS = (
    "naive", "N8", "N8-freq", "N8-fixed", "N16", "N16-freq", "N16-fixed",
    "N32", "N32-freq", "N32-fixed", "SBNDM2", "SBNDM4",
)
M_VALUES = tuple(range(4, 65, 4))
CSV_HEADER = ("corpus", "algorithm", "m", "runs", "mean_ms", "stddev_ms", "checksum", "config")

_BLOCK_NAME = re.compile(r"^N(8|16|32)(-freq|-fixed|-fixeds)?(?:-r(\d+))?$")
_ORDER_OF_SUFFIX = {None: "identity", "-freq": "freq", "-fixed": "pih", "-fixeds": "pihs"}


class ChecksumMismatch(RuntimeError):
    pass


class Unavailable(Exception):
    pass


@dataclass(frozen=True)
class BenchRecord:
    corpus: str
    algorithm: str
    m: int
    runs: int
    mean_ms: Optional[float]
    stddev_ms: Optional[float]
    count_checksum: Optional[int]
    config: str
    valid: bool = True

    @property
    def skipped(self) -> bool:
        return self.mean_ms is None


@dataclass(frozen=True)
class BenchPlan:
    corpora: Sequence[Corpus]
    algorithms: Sequence[str] = ALGORITHMS
    m_values: Sequence[int] = M_VALUES
    runs: int = 30
    seed: int = 1
    patterns_per_cell: int = 1
    tables: dict = field(default_factory=dict)


def cell_seed(seed: int, corpus: str, m: int) -> int:
    return zlib.crc32(f"{seed}:{corpus}:{m}".encode())


def make_searcher(algorithm: str, pattern: bytes, table: FrequencyTable,
                  alphabet_size: int) -> tuple[Callable[[bytes], int], str]:
    """Return ``(count_fn, config_description)``; raises Unavailable or ValueError."""
    if algorithm == "naive":
        cfg = SearchConfig()
        return (lambda t: search(pattern, t, cfg).count), "width=scalar order=identity r=1"
    if algorithm in ("SBNDM2", "SBNDM4"):
        q = int(algorithm[-1])
        return (lambda t: sbndm_search(pattern, t, q).count), f"q={q} w=64"
    match = _BLOCK_NAME.match(algorithm)
    if not match:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    width = int(match.group(1))
    if width not in capability_probe():
        raise Unavailable(algorithm)
    order = _ORDER_OF_SUFFIX[match.group(2)]
    peel = int(match.group(3)) if match.group(3) else None
    cfg = configure(pattern, width=width, order=order, table=table, peel_r=peel,
                    alphabet_size=alphabet_size)
    return (lambda t: search(pattern, t, cfg).count), f"width={width} order={order} r={cfg.peel_r}"


def _time_cell(fns, text, runs):
    for fn in fns:
        fn(text)
    samples = []
    checksum = 0
    for _ in range(runs):
        checksum = 0
        start = time.perf_counter()
        for fn in fns:
            checksum += fn(text)
        samples.append((time.perf_counter() - start) * 1e3 / len(fns))
    return samples, checksum


def run_benchmark(plan: BenchPlan, strict: bool = True,
                  progress: Optional[Callable[[BenchRecord], None]] = None) -> list[BenchRecord]:
    """Run every (corpus, m, algorithm) cell of ``plan``.

    With ``strict`` a count that disagrees with the oracle raises
    ChecksumMismatch; otherwise the record is kept with ``valid=False``.
    Algorithms whose block width the machine lacks yield skipped records.
    """
    records = []
    for corpus in plan.corpora:
        table = plan.tables.get(corpus.name) or build_frequency_table(corpus)
        sigma = corpus.alphabet_size
        for m in plan.m_values:
            seed = cell_seed(plan.seed, corpus.name, m)
            patterns = sample_patterns(corpus, m, plan.patterns_per_cell, seed).patterns
            expected = sum(oracle_count(p, corpus.text).count for p in patterns)
            for algorithm in plan.algorithms:
                try:
                    built = [make_searcher(algorithm, p, table, sigma) for p in patterns]
                except Unavailable:
                    record = BenchRecord(corpus.name, algorithm, m, 0, None, None, None,
                                         "skipped: unavailable")
                else:
                    fns = [fn for fn, _ in built]
                    samples, checksum = _time_cell(fns, corpus.text, plan.runs)
                    config = f"{built[0][1]} seed={seed} rng={RNG_NAME}"
                    valid = checksum == expected
                    if not valid and strict:
                        raise ChecksumMismatch(
                            f"{algorithm} on {corpus.name} m={m}: {checksum} != {expected}")
                    record = BenchRecord(
                        corpus.name, algorithm, m, plan.runs, statistics.fmean(samples),
                        statistics.stdev(samples) if len(samples) > 1 else 0.0,
                        checksum, config, valid)
                records.append(record)
                if progress:
                    progress(record)
    return records


def _sorted(records):
    return sorted(records, key=lambda r: (r.corpus, r.m, r.algorithm))


def emit_csv(records: Sequence[BenchRecord], path: str | os.PathLike) -> None:
    with open(path, "w", newline="") as fh:
        write_csv(records, fh)


def write_csv(records: Sequence[BenchRecord], fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in _sorted(records):
        if r.skipped:
            writer.writerow([r.corpus, r.algorithm, r.m, r.runs, "", "", "", "skipped"])
        else:
            writer.writerow([r.corpus, r.algorithm, r.m, r.runs, f"{r.mean_ms:.6f}",
                             f"{r.stddev_ms:.6f}", r.count_checksum, r.config])


def emit_plot_data(records: Sequence[BenchRecord], directory: str | os.PathLike) -> list[Path]:
    """One whitespace-separated file per corpus: ``m`` then one mean-time column per algorithm."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for corpus in sorted({r.corpus for r in records}):
        rows = [r for r in records if r.corpus == corpus]
        algorithms = list(dict.fromkeys(r.algorithm for r in rows))
        table = {(r.m, r.algorithm): r.mean_ms for r in rows}
        path = directory / f"{corpus}.dat"
        with path.open("w") as fh:
            fh.write("# m " + " ".join(algorithms) + "\n")
            for m in sorted({r.m for r in rows}):
                cells = [table.get((m, a)) for a in algorithms]
                fh.write(f"{m} " + " ".join("NaN" if c is None else f"{c:.6f}" for c in cells) + "\n")
        written.append(path)
    return written


def checksums_agree(records: Sequence[BenchRecord]) -> bool:
    cells: dict = {}
    for r in records:
        if not r.skipped:
            cells.setdefault((r.corpus, r.m), set()).add(r.count_checksum)
    return all(len(v) == 1 for v in cells.values())
