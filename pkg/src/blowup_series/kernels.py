"""Backend selection for the sparse integer convolution used by every
polynomial and series product in the package.

The compiled kernel is used when it imports and the inputs are safe for
int64 accumulation; otherwise the pure-Python twin runs. Setting the
environment variable ``BLOWUP_SERIES_PURE=1`` forces the fallback.
Both paths return identical results.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("BLOWUP_SERIES_PURE"):
        raise ImportError("pure-Python backend requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

_INT64_MAX = (1 << 63) - 1
# dense accumulator span the compiled kernel may allocate
_MAX_SPAN = 1 << 22
# below this many term products the call overhead dominates
_MIN_WORK = 64


def _fits_int64(ca, cb) -> bool:
    if not all(type(c) is int for c in ca) or not all(type(c) is int for c in cb):
        return False
    ma = max(map(abs, ca))
    mb = max(map(abs, cb))
    return ma * mb * min(len(ca), len(cb)) <= _INT64_MAX


def convolve(ea, ca, eb, cb, limit=None):
    """Product of two sparse integer sequences given as sorted exponent and
    coefficient lists, dropping exponents ``>= limit``."""
    if not ea or not eb:
        return [], []
    if (
        _ckernels is not None
        and len(ea) * len(eb) >= _MIN_WORK
        and ea[-1] + eb[-1] - ea[0] - eb[0] < _MAX_SPAN
        and _fits_int64(ca, cb)
    ):
        return _ckernels.convolve(ea, ca, eb, cb, limit)
    return _pykernels.convolve(ea, ca, eb, cb, limit)


def convolve_python(ea, ca, eb, cb, limit=None):
    return _pykernels.convolve(ea, ca, eb, cb, limit)


def convolve_compiled(ea, ca, eb, cb, limit=None):
    """Compiled kernel without the dispatcher's safety net; raises
    ``RuntimeError`` if the extension is not built."""
    if _ckernels is None:
        raise RuntimeError("compiled kernel unavailable")
    return _ckernels.convolve(ea, ca, eb, cb, limit)
