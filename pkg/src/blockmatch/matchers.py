"""Naive search engines: scalar and block-parallel, with comparison order and loop peeling.

All engines share one control flow.  For an alignment (scalar) or a block of
``width`` consecutive alignments (block engines) the pattern positions are
checked in ``order``; the first ``peel_r`` checks run unconditionally and the
early-exit test runs after every check from then on.  Block engines process
only blocks whose reads stay inside the text and hand the remaining
alignments to the scalar engine with the same order and peeling factor.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from numba import njit

from ._llvm import ctz, popcnt
from .block_compare import COMPARE, require_width
from .core import SearchReport, as_array, check_pattern
from .orders import FrequencyTable, is_permutation, make_order

MODES = ("count", "report")


@njit(cache=True)
def _scalar_range(t, p, order, r, start, stop, positions, npos):
    """Check alignments ``start..stop`` (0-based, inclusive) one at a time.

    Occurrences are written to ``positions`` when it is non-empty.
    """
    m = p.size
    report = positions.size > 0
    count = 0
    comparisons = 0
    for i in range(start, stop + 1):
        ok = True
        for q in range(r):
            pos = order[q]
            if t[i + pos] != p[pos]:
                ok = False
        comparisons += r
        if ok:
            for q in range(r, m):
                pos = order[q]
                comparisons += 1
                if t[i + pos] != p[pos]:
                    ok = False
                    break
        if ok:
            if report:
                positions[npos + count] = i + 1
            count += 1
    return count, comparisons


@njit(cache=True)
def _scalar_kernel(t, p, order, r, positions):
    return _scalar_range(t, p, order, r, 0, t.size - p.size, positions, 0)


def _block_kernel(width):
    compare = COMPARE[width]
    full = (1 << width) - 1

    @njit(cache=True)
    def kernel(t, p, order, r, positions):
        n = t.size
        m = p.size
        last = n - m
        report = positions.size > 0
        count = 0
        calls = 0
        i = 0
        # a block is safe when its last alignment is valid: every read is then < n
        while i + width - 1 <= last:
            if r <= 1:
                found = full
                j = 0
            else:
                pos = order[0]
                found = compare(t, i + pos, p[pos])
                for q in range(1, r):
                    pos = order[q]
                    found &= compare(t, i + pos, p[pos])
                calls += r
                j = r
            while found != 0 and j < m:
                pos = order[j]
                found &= compare(t, i + pos, p[pos])
                calls += 1
                j += 1
            if found != 0:
                if report:
                    bits = found
                    while bits != 0:
                        positions[count] = i + ctz(bits) + 1
                        count += 1
                        bits &= bits - 1
                else:
                    count += popcnt(found)
            i += width
        tail, comparisons = _scalar_range(t, p, order, r, i, last, positions, count)
        return count + tail, calls, comparisons

    return kernel


_BLOCK_KERNELS = {w: _block_kernel(w) for w in COMPARE}


def default_peel(order_kind: str, alphabet_size: int) -> int:
    """Peeling factor used when none is given.

    Four-letter texts get 5; frequency order on alphabets over 32 symbols gets
    2; everything else gets 3.
    """
    if alphabet_size <= 4:
        return 5
    if order_kind == "freq" and alphabet_size > 32:
        return 2
    return 3


@dataclass(frozen=True)
class SearchConfig:
    """How to search.

    ``width=None`` selects the scalar engine.  ``order`` is a 1-based
    permutation of pattern positions (identity when ``None``); ``peel_r`` is
    clamped to ``len(order)`` when the order is known and to ``m`` at search
    time otherwise.
    """

    width: Optional[int] = None
    order: Optional[tuple[int, ...]] = None
    peel_r: int = 1
    mode: str = "count"
    instrument: bool = False
    _order0: Optional[np.ndarray] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.width is not None:
            require_width(self.width)
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.peel_r < 1:
            raise ValueError("peel_r must be at least 1")
        if self.order is not None:
            order = tuple(int(x) for x in self.order)
            if not order or not is_permutation(order, len(order)):
                raise ValueError("order must be a permutation of 1..m")
            object.__setattr__(self, "order", order)
            object.__setattr__(self, "peel_r", min(self.peel_r, len(order)))
            object.__setattr__(self, "_order0", np.array(order, np.int64) - 1)

    def order_array(self, m: int) -> np.ndarray:
        if self._order0 is None:
            return np.arange(m, dtype=np.int64)
        if self._order0.size != m:
            raise ValueError(f"order has {self._order0.size} positions, pattern has {m}")
        return self._order0


def _positions_buffer(cfg, p, t):
    # one slot per alignment; kernels never grow it
    size = t.size - p.size + 1 if cfg.mode == "report" else 0
    return np.empty(size, np.int64)


def _report(cfg, count, positions, comparisons=None, block_calls=None):
    return SearchReport(
        count=int(count),
        positions=tuple(int(x) for x in positions) if cfg.mode == "report" else None,
        comparisons=int(comparisons) if cfg.instrument and comparisons is not None else None,
        block_comparisons=int(block_calls) if cfg.instrument and block_calls is not None else None,
    )


def naive_search(p, t, cfg: SearchConfig = SearchConfig()) -> SearchReport:
    """Scalar naive search: one alignment at a time."""
    if cfg.width is not None:
        raise ValueError("naive_search needs a scalar config (width=None)")
    p = as_array(p)
    t = as_array(t)
    check_pattern(p)
    order = cfg.order_array(p.size)
    if p.size > t.size:
        return _report(cfg, 0, (), 0)
    positions = _positions_buffer(cfg, p, t)
    count, comparisons = _scalar_kernel(t, p, order, min(cfg.peel_r, p.size), positions)
    return _report(cfg, count, positions[:count], comparisons)


def block_naive_search(p, t, cfg: SearchConfig) -> SearchReport:
    """Block-parallel naive search checking ``cfg.width`` alignments per step."""
    if cfg.width is None:
        raise ValueError("block_naive_search needs a block width")
    p = as_array(p)
    t = as_array(t)
    check_pattern(p)
    order = cfg.order_array(p.size)
    if p.size > t.size:
        return _report(cfg, 0, (), 0, 0)
    positions = _positions_buffer(cfg, p, t)
    count, calls, comparisons = _BLOCK_KERNELS[cfg.width](
        t, p, order, min(cfg.peel_r, p.size), positions)
    return _report(cfg, count, positions[:count], comparisons, calls)


def ordered_block_search(p, t, order: Sequence[int], width: int, peel_r: int = 1,
                         mode: str = "count") -> SearchReport:
    return block_naive_search(p, t, SearchConfig(width, tuple(order), peel_r, mode))


def search(p, t, cfg: SearchConfig) -> SearchReport:
    if cfg.width is None:
        return naive_search(p, t, cfg)
    return block_naive_search(p, t, cfg)


def configure(p, *, width: Optional[int], order: str = "pih",
              table: Optional[FrequencyTable] = None, peel_r: Optional[int] = None,
              alphabet_size: int = 256, mode: str = "count",
              instrument: bool = False) -> SearchConfig:
    """Build a config for pattern ``p`` from an order name and the peeling policy."""
    if peel_r is None:
        peel_r = default_peel(order, alphabet_size)
    return SearchConfig(width, make_order(order, p, table), peel_r, mode, instrument)


def extract_positions(found: int, block_start: int) -> list[int]:
    """1-based positions ``block_start + k`` for every set bit ``k`` of ``found``."""
    out = []
    while found:
        low = found & -found
        out.append(block_start + low.bit_length() - 1)
        found ^= low
    return out
