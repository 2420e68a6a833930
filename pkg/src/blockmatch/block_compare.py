"""The width-α byte comparison primitive.

``block_compare(t, i, p, j, width)`` compares the ``width`` text bytes starting
at ``t[i + j - 1]`` with ``width`` copies of ``p[j]`` and returns the equality
mask: bit ``k`` is set iff ``t[i + j - 1 + k] == p[j]``.  Widths 16 and 32 run
as a single vector compare plus movemask; width 8 is a portable scalar loop.
"""
from __future__ import annotations

import functools
import os
import platform

from numba import njit

from ._llvm import vector_compare
from .core import WIDTHS, as_array

_vec16 = vector_compare(16)
_vec32 = vector_compare(32)


@njit(inline="always")
def compare8(t, pos, byte):
    mask = 0
    for k in range(8):
        if t[pos + k] == byte:
            mask |= 1 << k
    return mask


@njit(inline="always")
def compare16(t, pos, byte):
    return _vec16(t, pos, byte)


@njit(inline="always")
def compare32(t, pos, byte):
    return _vec32(t, pos, byte)


COMPARE = {8: compare8, 16: compare16, 32: compare32}


@njit
def _call8(t, pos, byte):
    return compare8(t, pos, byte)


@njit
def _call16(t, pos, byte):
    return compare16(t, pos, byte)


@njit
def _call32(t, pos, byte):
    return compare32(t, pos, byte)


_CALL = {8: _call8, 16: _call16, 32: _call32}


@functools.lru_cache(maxsize=1)
def _hardware_widths() -> frozenset[int]:
    try:
        from llvmlite import binding
        features = binding.get_host_cpu_features()
    except Exception:  # pragma: no cover - llvmlite without host feature query
        features = {}
    widths = {8}
    machine = platform.machine().lower()
    if features.get("sse2") or features.get("neon") or machine in ("arm64", "aarch64"):
        widths.add(16)
    if features.get("avx2"):
        widths.add(32)
    return frozenset(widths)


def capability_probe() -> frozenset[int]:
    """Block widths usable on this machine.

    Always contains 8.  ``BLOCKMATCH_MAX_WIDTH`` caps the result, which is how
    the fallback paths are exercised on wide hardware.
    """
    widths = _hardware_widths()
    cap = os.environ.get("BLOCKMATCH_MAX_WIDTH")
    if cap:
        widths = frozenset(w for w in widths if w <= int(cap)) | {8}
    return widths


def best_width() -> int:
    return max(capability_probe())


class WidthUnavailable(ValueError):
    pass


def require_width(width: int) -> None:
    if width not in WIDTHS:
        raise ValueError(f"unsupported block width {width}")
    if width not in capability_probe():
        raise WidthUnavailable(f"block width {width} is not available on this machine")


def block_compare(t, i: int, p, j: int, width: int) -> int:
    """Equality mask of ``t[i+j-1 .. i+j-2+width]`` against ``p[j]`` (1-based).

    Raises IndexError when the read window leaves the text or ``j`` is not a
    pattern position, and ValueError for an unsupported or unavailable width.
    """
    require_width(width)
    t = as_array(t)
    p = as_array(p)
    if not 1 <= j <= p.size:
        raise IndexError(f"pattern position {j} outside 1..{p.size}")
    start = i + j - 2
    if i < 1 or start + width > t.size:
        raise IndexError(
            f"window t[{start + 1}..{start + width}] outside text of length {t.size}")
    return int(_CALL[width](t, start, p[j - 1]))
