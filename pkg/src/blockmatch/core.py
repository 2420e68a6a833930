"""Shared types and the brute-force reference matcher.

Positions exposed by this package are 1-based: the first byte of a text is
position 1.  Texts and patterns are plain ``bytes``-like objects; no encoding
is assumed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

WIDTHS = (8, 16, 32)


@dataclass(frozen=True)
class SearchReport:
    """Result of one search.

    ``comparisons`` counts scalar symbol comparisons and ``block_comparisons``
    counts width-α vector comparisons; both are ``None`` unless the search was
    instrumented.
    """

    count: int
    positions: Optional[tuple[int, ...]] = None
    comparisons: Optional[int] = None
    block_comparisons: Optional[int] = None


def as_array(data) -> np.ndarray:
    """View ``bytes``/``bytearray``/``memoryview``/uint8 array data as a uint8 array."""
    if isinstance(data, np.ndarray):
        if data.dtype != np.uint8 or data.ndim != 1:
            raise TypeError("expected a 1-d uint8 array")
        return np.ascontiguousarray(data)
    if isinstance(data, str):
        raise TypeError("texts and patterns are bytes, not str")
    return np.frombuffer(bytes(data), dtype=np.uint8)


def as_bytes(data) -> bytes:
    if isinstance(data, np.ndarray):
        return as_array(data).tobytes()
    if isinstance(data, str):
        raise TypeError("texts and patterns are bytes, not str")
    return bytes(data)


def check_pattern(p: bytes) -> None:
    if len(p) < 1:
        raise ValueError("pattern must be at least one byte long")


def oracle_count(p, t) -> SearchReport:
    """Count occurrences of ``p`` in ``t`` by checking every alignment.

    Overlapping occurrences are counted; positions are always reported.
    """
    p = as_bytes(p)
    t = as_bytes(t)
    check_pattern(p)
    m, n = len(p), len(t)
    positions = []
    for i in range(n - m + 1):
        if t[i:i + m] == p:
            positions.append(i + 1)
    return SearchReport(len(positions), tuple(positions))


def popcount(mask: int, width: int = 32) -> int:
    """Number of set bits among the low ``width`` bits of ``mask``."""
    if mask < 0:
        raise ValueError("mask must be non-negative")
    return (mask & ((1 << width) - 1)).bit_count()
