"""SBNDMq baselines (simplified backward nondeterministic DAWG matching with q-gram start).

Bit convention: bit ``k`` of ``masks[c]`` is set iff ``p[m' - 1 - k] == c``
(0-based), so bit 0 stands for the last byte of the matched prefix.  The
window is read right to left; the state keeps, for every pattern factor that
equals the suffix read so far, one bit.  When the state dies after ``l`` reads
the window shifts by ``m' - l + 1``.  Windows of patterns longer than the word
match their first ``m'`` bytes and are verified bytewise.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .core import SearchReport, as_array, check_pattern

WORD = 64


class BaselineConfigError(ValueError):
    pass


@dataclass(frozen=True)
class BndmTables:
    masks: np.ndarray
    m_prime: int
    match_shift: int

    @classmethod
    def build(cls, p) -> BndmTables:
        p = as_array(p)
        m_prime = min(p.size, WORD)
        masks = np.zeros(256, np.uint64)
        for k in range(m_prime):
            masks[p[m_prime - 1 - k]] |= np.uint64(1) << np.uint64(k)
        masks.setflags(write=False)
        return cls(masks, m_prime, _smallest_period(p[:m_prime].tobytes()))


def _smallest_period(s: bytes) -> int:
    border = [0] * (len(s) + 1)
    border[0] = -1
    k = -1
    for i, c in enumerate(s):
        while k >= 0 and s[k] != c:
            k = border[k]
        k += 1
        border[i + 1] = k
    return len(s) - border[len(s)]


@njit(cache=True)
def _sbndm(t, p, masks, m_prime, q, match_shift):
    n = t.size
    m = p.size
    one = np.uint64(1)
    zero = np.uint64(0)
    count = 0
    s = 0
    while s <= n - m:
        end = s + m_prime - 1
        state = masks[t[end]]
        for k in range(1, q):
            state = (state << one) & masks[t[end - k]]
        if state == zero:
            s += m_prime - q + 1
            continue
        read = q
        while read < m_prime:
            state = (state << one) & masks[t[end - read]]
            read += 1
            if state == zero:
                break
        if state == zero:
            s += m_prime - read + 1
            continue
        ok = True
        for j in range(m_prime, m):
            if t[s + j] != p[j]:
                ok = False
                break
        if ok:
            count += 1
        s += match_shift
    return count


def sbndm_search(p, t, q: int = 2) -> SearchReport:
    """Count occurrences of ``p`` in ``t`` with SBNDM2 (``q=2``) or SBNDM4 (``q=4``)."""
    if q not in (2, 4):
        raise BaselineConfigError(f"q must be 2 or 4, got {q}")
    p = as_array(p)
    t = as_array(t)
    check_pattern(p)
    if p.size < q:
        raise BaselineConfigError(f"SBNDM{q} needs a pattern of at least {q} bytes")
    tables = BndmTables.build(p)
    if p.size > t.size:
        return SearchReport(0)
    return SearchReport(int(_sbndm(t, p, tables.masks, tables.m_prime, q, tables.match_shift)))
