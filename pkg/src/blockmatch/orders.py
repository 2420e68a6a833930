"""Comparison orders over pattern positions.

An order is a tuple of distinct 1-based pattern positions; a matcher checks
``p[order[0]]`` first, then ``p[order[1]]``, and so on.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .core import as_bytes, check_pattern

SPACE = 0x20


class FrequencyTableFormatError(ValueError):
    pass


@dataclass(frozen=True)
class FrequencyTable:
    """Occurrence count of every byte value in some training text."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != 256:
            raise ValueError("a frequency table has exactly 256 entries")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be non-negative")

    @property
    def total(self) -> int:
        return sum(self.counts)

    @classmethod
    def from_text(cls, text) -> FrequencyTable:
        data = np.frombuffer(as_bytes(text), dtype=np.uint8)
        return cls(tuple(int(c) for c in np.bincount(data, minlength=256)))

    def save(self, path: str | os.PathLike) -> None:
        with open(path, "w") as fh:
            for byte, count in enumerate(self.counts):
                fh.write(f"{byte} {count}\n")

    @classmethod
    def load(cls, path: str | os.PathLike) -> FrequencyTable:
        """Read the 256-line ``byte_value count`` format written by :meth:`save`."""
        counts: list[int | None] = [None] * 256
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                fields = line.split()
                if len(fields) != 2 or not all(f.isdigit() for f in fields):
                    raise FrequencyTableFormatError(f"{path}:{lineno}: expected 'byte count'")
                byte, count = int(fields[0]), int(fields[1])
                if byte > 255:
                    raise FrequencyTableFormatError(f"{path}:{lineno}: byte value {byte} > 255")
                if counts[byte] is not None:
                    raise FrequencyTableFormatError(f"{path}:{lineno}: duplicate byte {byte}")
                counts[byte] = count
        missing = [b for b, c in enumerate(counts) if c is None]
        if missing:
            raise FrequencyTableFormatError(f"{path}: no entry for byte {missing[0]}")
        return cls(tuple(counts))


def is_permutation(order, m: int) -> bool:
    return sorted(order) == list(range(1, m + 1))


def identity_order(m: int) -> tuple[int, ...]:
    if m < 1:
        raise ValueError("m must be at least 1")
    return tuple(range(1, m + 1))


def frequency_order(p, table: FrequencyTable) -> tuple[int, ...]:
    """Positions sorted by ascending frequency of their byte; ties keep position order."""
    p = as_bytes(p)
    check_pattern(p)
    return tuple(sorted(range(1, len(p) + 1), key=lambda j: (table.counts[p[j - 1]], j)))


def pi_h_order(m: int) -> tuple[int, ...]:
    """Fixed order that avoids neighbouring positions: 1, m, 4, 7, ..., 3, 6, ..., 2, 5, ..."""
    if m < 1:
        raise ValueError("m must be at least 1")
    order = [1]
    seen = {1}
    if m != 1:
        order.append(m)
        seen.add(m)
    for start in (4, 3, 2):
        for pos in range(start, m + 1, 3):
            if pos not in seen:
                order.append(pos)
                seen.add(pos)
    return tuple(order)


def pi_hs_order(p, space: int = SPACE) -> tuple[int, ...]:
    """:func:`pi_h_order` over the non-space positions, then the spaces in ascending order."""
    p = as_bytes(p)
    check_pattern(p)
    rest = [j for j in range(1, len(p) + 1) if p[j - 1] != space]
    spaces = [j for j in range(1, len(p) + 1) if p[j - 1] == space]
    head = tuple(rest[rank - 1] for rank in pi_h_order(len(rest))) if rest else ()
    return head + tuple(spaces)


ORDER_KINDS = ("identity", "freq", "pih", "pihs")


def make_order(kind: str, p, table: FrequencyTable | None = None) -> tuple[int, ...]:
    p = as_bytes(p)
    if kind == "identity":
        return identity_order(len(p))
    if kind == "freq":
        if table is None:
            raise ValueError("frequency order needs a frequency table")
        return frequency_order(p, table)
    if kind == "pih":
        return pi_h_order(len(p))
    if kind == "pihs":
        return pi_hs_order(p)
    raise ValueError(f"unknown order {kind!r}; expected one of {', '.join(ORDER_KINDS)}")
