"""Acceptance criteria.  Each test prints one PASS/FAIL line in the terminal summary."""
import itertools
import random
import statistics
import time

import pytest

from blockmatch import (FrequencyTable, SearchConfig, block_compare, block_naive_search,
                        capability_probe, configure, default_peel, frequency_order,
                        identity_order, naive_search, oracle_count, pi_h_order, pi_hs_order,
                        search)
from blockmatch.baselines import sbndm_search
from blockmatch.bench import ALGORITHMS, M_VALUES, BenchPlan, checksums_agree, emit_csv, run_benchmark
from blockmatch.corpus import FIXTURES, Corpus, load_fixture, sample_patterns, synthetic_text
from blockmatch.orders import ORDER_KINDS

from conftest import random_case

WIDTHS = sorted(capability_probe())
ENGINES = [None] + WIDTHS
PEELS = (1, 2, 3, 5, "m")
DIFFERENTIAL_CASES = 10_000


def acceptance(number, title):
    return pytest.mark.acceptance(number, title)


def median_ms(fn, runs=30):
    fn()
    samples = []
    for _ in range(runs):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples) * 1e3


@pytest.fixture(scope="module")
def differential():
    """Run every engine, order and peeling factor over the shared random case set."""
    rng = random.Random(20170101)
    start = time.perf_counter()
    failures = []
    peel_counts = []
    for case in range(DIFFERENTIAL_CASES):
        p, t, sigma = random_case(rng)
        expected = oracle_count(p, t)
        table = FrequencyTable.from_text(t) if case % 2 else FrequencyTable(
            tuple(rng.randrange(1000) for _ in range(256)))
        by_peel = {}
        for engine, kind in itertools.product(ENGINES, ORDER_KINDS):
            for k, r in enumerate(PEELS):
                r = len(p) if r == "m" else r
                report_mode = k == case % len(PEELS)
                cfg = configure(p, width=engine, order=kind, table=table, peel_r=r,
                                mode="report" if report_mode else "count")
                got = search(p, t, cfg)
                by_peel.setdefault((engine, kind), set()).add(got.count)
                if got.count != expected.count or (report_mode and got.positions != expected.positions):
                    failures.append((case, engine, kind, r, p, t))
        peel_counts.append(all(len(v) == 1 for v in by_peel.values()))
        for q in (2, 4):
            if len(p) >= q and sbndm_search(p, t, q).count != expected.count:
                failures.append((case, f"SBNDM{q}", None, None, p, t))
    return failures, peel_counts, time.perf_counter() - start


@acceptance(1, "differential correctness")
def test_01_differential_correctness(differential, acceptance_detail):
    failures, _, elapsed = differential
    acceptance_detail(f"{DIFFERENTIAL_CASES} cases, widths {WIDTHS}, {elapsed:.1f}s")
    assert not failures, failures[:3]
    assert elapsed < 120


@acceptance(2, "block_compare equals the scalar mask oracle")
def test_02_mask_oracle(acceptance_detail):
    def scalar_mask(t, i, p, j, width):
        return sum(1 << k for k in range(width) if t[i + j - 2 + k] == p[j - 1])

    start = time.perf_counter()
    rng = random.Random(2)
    for width in WIDTHS:
        for _ in range(100_000):
            sigma = rng.choice((2, 4, 256))
            m = rng.randint(1, 16)
            p = bytes(rng.randrange(sigma) for _ in range(m))
            j = rng.randint(1, m)
            t = bytes(rng.randrange(sigma) for _ in range(width + j - 1 + rng.randint(0, 24)))
            i = rng.randint(1, len(t) - width - j + 2)
            assert block_compare(t, i, p, j, width) == scalar_mask(t, i, p, j, width)
    exhaustive = 0
    for n in range(8, 13):
        for letters in itertools.product(b"ab", repeat=n):
            t = bytes(letters)
            for p in (b"a", b"b", b"ab", b"ba", b"aab", b"bba"):
                for j in range(1, len(p) + 1):
                    for i in range(1, n - 8 - j + 3):
                        assert block_compare(t, i, p, j, 8) == scalar_mask(t, i, p, j, 8)
                        exhaustive += 1
    elapsed = time.perf_counter() - start
    acceptance_detail(f"100000 random per width {WIDTHS}, {exhaustive} exhaustive, {elapsed:.1f}s")
    assert elapsed < 60


@acceptance(3, "tail seam")
def test_03_tail_seam(acceptance_detail):
    rng = random.Random(3)
    checked = 0
    for width in WIDTHS:
        for m in (1, 2, 3, 7, width - 1, width, width + 1, 2 * width + 3):
            for blocks in (0, 1, 2):
                for residue in range(width):
                    n = m - 1 + blocks * width + residue
                    if n < m:
                        continue
                    t = bytes(rng.choice(b"ab") for _ in range(n))
                    # plant occurrences at the first and last alignment
                    p = t[-m:]
                    t = p + t[m:]
                    expected = oracle_count(p, t)
                    for kind in ("identity", "pih"):
                        for r in (1, 2, m):
                            cfg = configure(p, width=width, order=kind, peel_r=r, mode="report")
                            assert block_naive_search(p, t, cfg).positions == expected.positions
                            checked += 1
    acceptance_detail(f"{checked} seam configurations")


@acceptance(4, "scalar naive averages <= 1.2 comparisons per text position")
def test_04_comparison_count(acceptance_detail):
    text = synthetic_text("english", 1 << 20, seed=4)
    corpus = Corpus("english-1MB", text)
    patterns = sample_patterns(corpus, 8, 100, seed=4).patterns
    alignments = len(text) - 8 + 1
    per_position = [naive_search(p, text, SearchConfig(instrument=True)).comparisons / alignments
                    for p in patterns]
    average = statistics.fmean(per_position)
    acceptance_detail(f"{average:.3f} comparisons per position")
    assert average <= 1.2


@acceptance(5, "width-16 block search >= 3x faster than scalar naive")
def test_05_block_speedup(acceptance_detail):
    if 16 not in WIDTHS:
        pytest.fail("width 16 is not available on this machine")
    text = synthetic_text("english", 4 << 20, seed=5)
    pattern = sample_patterns(Corpus("english-4MB", text), 16, 1, seed=5).patterns[0]
    block_cfg = SearchConfig(16, identity_order(16))
    scalar = median_ms(lambda: naive_search(pattern, text))
    block = median_ms(lambda: block_naive_search(pattern, text, block_cfg))
    acceptance_detail(f"scalar {scalar:.2f} ms, width 16 {block:.2f} ms, {scalar / block:.1f}x")
    assert scalar / block >= 3


@acceptance(6, "frequency order beats identity order on natural-language text")
def test_06_frequency_order_benefit(acceptance_detail):
    text = synthetic_text("english", 4 << 20, seed=6)
    training = FrequencyTable.from_text(synthetic_text("english", 1 << 20, seed=60))
    corpus = Corpus("english-4MB", text)
    sigma = corpus.alphabet_size
    results = []
    for width in [w for w in WIDTHS if w >= 16] or WIDTHS:
        for m in (8, 16, 32):
            patterns = sample_patterns(corpus, m, 20, seed=m).patterns
            plain = [SearchConfig(width, identity_order(m), default_peel("identity", sigma))
                     for _ in patterns]
            freq = [SearchConfig(width, frequency_order(p, training), default_peel("freq", sigma))
                    for p in patterns]
            t_plain = median_ms(lambda: [block_naive_search(p, text, c) for p, c in zip(patterns, plain)])
            t_freq = median_ms(lambda: [block_naive_search(p, text, c) for p, c in zip(patterns, freq)])
            results.append((width, m, t_plain, t_freq))
    acceptance_detail(", ".join(f"N{w} m={m}: {a:.1f} vs {b:.1f} ms" for w, m, a, b in results))
    assert all(t_freq < t_plain for _, _, t_plain, t_freq in results)


@acceptance(7, "uniform DNA: orders agree on counts, timings informational")
def test_07_uniform_alphabet(acceptance_detail):
    text = synthetic_text("dna", 4 << 20, seed=7)
    corpus = Corpus("dna-4MB", text)
    table = FrequencyTable.from_text(text)
    width = max(WIDTHS)
    notes = []
    for m in (8, 16, 32):
        patterns = sample_patterns(corpus, m, 5, seed=m).patterns
        plain = [configure(p, width=width, order="identity", alphabet_size=4) for p in patterns]
        freq = [configure(p, width=width, order="freq", table=table, alphabet_size=4) for p in patterns]
        counts_plain = [block_naive_search(p, text, c).count for p, c in zip(patterns, plain)]
        counts_freq = [block_naive_search(p, text, c).count for p, c in zip(patterns, freq)]
        assert counts_plain == counts_freq == [oracle_count(p, text).count for p in patterns]
        t_plain = median_ms(lambda: [block_naive_search(p, text, c) for p, c in zip(patterns, plain)], 10)
        t_freq = median_ms(lambda: [block_naive_search(p, text, c) for p, c in zip(patterns, freq)], 10)
        notes.append(f"m={m}: identity {t_plain:.1f} ms, freq {t_freq:.1f} ms")
    acceptance_detail(f"N{width} " + ", ".join(notes))


@acceptance(8, "peeling defaults follow the policy and never change counts")
def test_08_peeling(differential, acceptance_detail):
    assert default_peel("freq", 63) == 2
    assert default_peel("freq", 117) == 2
    assert default_peel("identity", 63) == 3
    assert default_peel("pih", 117) == 3
    assert default_peel("pihs", 63) == 3
    assert default_peel("pih", 19) == 3
    assert default_peel("freq", 4) == 5
    assert default_peel("identity", 4) == 5
    _, peel_counts, _ = differential
    acceptance_detail(f"r in {PEELS} over {len(peel_counts)} cases")
    assert all(peel_counts)


@acceptance(9, "order constructors yield permutations")
def test_09_permutations(acceptance_detail):
    rng = random.Random(9)
    table = FrequencyTable(tuple(rng.randrange(50) for _ in range(256)))
    for m in range(1, 257):
        p = bytes(rng.choice(b"ab  cd") for _ in range(m))
        for order in (identity_order(m), pi_h_order(m), pi_hs_order(p), frequency_order(p, table)):
            assert sorted(order) == list(range(1, m + 1))
    assert pi_h_order(8) == (1, 8, 4, 7, 3, 6, 2, 5)
    acceptance_detail("m = 1..256, pi_h(8) = (1,8,4,7,3,6,2,5)")


@acceptance(10, "benchmark harness integrity")
def test_10_benchmark_harness(tmp_path, acceptance_detail):
    start = time.perf_counter()
    corpora = [load_fixture(name) for name in FIXTURES]
    plan = BenchPlan(corpora, ALGORITHMS, M_VALUES, runs=10, seed=10)
    records = run_benchmark(plan)
    path = tmp_path / "bench.csv"
    emit_csv(records, path)
    rows = path.read_text().splitlines()
    elapsed = time.perf_counter() - start
    rerun = run_benchmark(plan)
    expected_rows = len(corpora) * len(M_VALUES) * len(ALGORITHMS)
    skipped = sum(r.skipped for r in records)
    acceptance_detail(f"{len(rows) - 1} rows, {skipped} skipped, {elapsed:.1f}s")
    assert checksums_agree(records)
    assert len(rows) == 1 + expected_rows
    assert [r.count_checksum for r in records] == [r.count_checksum for r in rerun]
    assert elapsed < 300
