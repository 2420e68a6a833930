# A small run of the benchmark harness over the bundled fixtures.
import sys

from blockmatch.bench import BenchPlan, run_benchmark, write_csv
from blockmatch.corpus import FIXTURES, load_fixture

plan = BenchPlan(
    corpora=[load_fixture(name) for name in FIXTURES],
    algorithms=("naive", "N16", "N16-freq", "N32", "N32-freq", "N32-fixed", "SBNDM2", "SBNDM4"),
    m_values=(4, 8, 16, 32, 64),
    runs=10,
)
records = run_benchmark(plan)
write_csv(records, sys.stdout)
