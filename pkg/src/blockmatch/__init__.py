"""Block-parallel naive exact string matching."""
from .block_compare import block_compare, capability_probe
from .core import SearchReport, oracle_count, popcount
from .matchers import (SearchConfig, block_naive_search, configure, default_peel,
                       extract_positions, naive_search, ordered_block_search, search)
from .orders import (FrequencyTable, frequency_order, identity_order, pi_h_order,
                     pi_hs_order)

__all__ = [
    "FrequencyTable", "SearchConfig", "SearchReport", "block_compare", "block_naive_search",
    "capability_probe", "configure", "default_peel", "extract_positions", "frequency_order",
    "identity_order", "naive_search", "oracle_count", "ordered_block_search", "pi_h_order",
    "pi_hs_order", "popcount", "search",
]
