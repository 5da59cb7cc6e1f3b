"""Marked index cells and the JIT seam shared by the construction kernels.

A cell is a signed fixed-width integer (int32 or int64). Its top bit is the
mark, so a marked cell is negative; the low bits hold a nonnegative value.
Kernels receive the two width constants as arguments, which lets numba
specialise each kernel once per cell dtype.
"""

from __future__ import annotations

import logging

logger = logging.getLogger(__name__)

try:
    import numba

    JIT_AVAILABLE = True
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None
    JIT_AVAILABLE = False
    logger.debug("numba not importable; construction kernels run as plain Python")


def kernel(fn):
    """Compile `fn` in nopython mode when numba is available."""
    if numba is None:  # pragma: no cover
        return fn
    return numba.njit(cache=True, nogil=True)(fn)


def jit_enabled() -> bool:
    if numba is None:
        return False
    return not bool(numba.config.DISABLE_JIT)


@kernel
def is_marked(cell):
    return cell < 0


@kernel
def value_of(cell, low_mask):
    return cell & low_mask


@kernel
def marked(value, mark):
    return value | mark
