# Loop peeling: r comparisons run before the first early-exit test.
# The count never changes; only the work does.
from blockmatch import SearchConfig, block_naive_search, frequency_order
from blockmatch.corpus import Corpus, build_frequency_table, sample_patterns, synthetic_text

for kind in ("english", "dna"):
    text = synthetic_text(kind, 1_000_000, seed=4)
    corpus = Corpus(kind, text)
    table = build_frequency_table(corpus)
    pattern = sample_patterns(corpus, 16, 1, seed=4).patterns[0]
    order = frequency_order(pattern, table)
    print(kind, pattern)
    for r in (1, 2, 3, 5, 8):
        rep = block_naive_search(pattern, text, SearchConfig(16, order, r, instrument=True))
        print(f"  r={r}: count={rep.count} vector compares={rep.block_comparisons}")
