# Counting and reporting occurrences with every engine.
import time

from blockmatch import SearchConfig, configure, naive_search, oracle_count, search
from blockmatch.baselines import sbndm_search
from blockmatch.corpus import Corpus, build_frequency_table, sample_patterns, synthetic_text

text = synthetic_text("english", 2_000_000, seed=3)
corpus = Corpus("english-2MB", text)
table = build_frequency_table(corpus)
pattern = sample_patterns(corpus, 12, 1, seed=3).patterns[0]
print("pattern:", pattern)

# Reporting mode returns 1-based positions.
report = search(pattern, text, configure(pattern, width=16, order="freq", table=table,
                                         mode="report"))
print("count:", report.count, "first positions:", report.positions[:5])

# Instrumented scalar search: comparisons per text position.
scalar = naive_search(pattern, text, SearchConfig(instrument=True))
print("scalar comparisons per position: %.3f" % (scalar.comparisons / len(text)))


def timed(label, fn):
    fn()
    start = time.perf_counter()
    for _ in range(10):
        count = fn()
    print(f"{label:>12}: {(time.perf_counter() - start) * 100:.2f} ms  count={count}")


timed("naive", lambda: naive_search(pattern, text).count)
for width in (8, 16, 32):
    for order in ("identity", "pih", "freq"):
        cfg = configure(pattern, width=width, order=order, table=table,
                        alphabet_size=corpus.alphabet_size)
        timed(f"N{width}-{order}", lambda: search(pattern, text, cfg).count)
timed("SBNDM2", lambda: sbndm_search(pattern, text, 2).count)
timed("SBNDM4", lambda: sbndm_search(pattern, text, 4).count)
print("oracle count:", oracle_count(pattern, text).count)
