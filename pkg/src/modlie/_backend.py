"""Kernel selection: the compiled ``_rref`` extension when importable, else numpy.

Set ``MODLIE_PURE=1`` to force the numpy fallback.
"""

from __future__ import annotations

import os

import numpy as np

from . import _fallback

BACKEND = "numpy"
_kernels = _fallback

if os.environ.get("MODLIE_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _rref as _compiled
    except ImportError:  # pragma: no cover - depends on the build
        pass
    else:
        _kernels = _compiled
        BACKEND = "cython"


def use(name: str) -> None:
    """Switch kernels at runtime (``"cython"`` or ``"numpy"``); used by benchmarks."""
    global _kernels, BACKEND
    if name == "numpy":
        _kernels, BACKEND = _fallback, "numpy"
    elif name == "cython":
        from . import _rref as _compiled

        _kernels, BACKEND = _compiled, "cython"
    else:
        raise ValueError(name)


def rref_inplace(m: np.ndarray, ctx, ncols: int = -1) -> list[int]:
    return _kernels.rref_inplace(m, ctx.add_table, ctx.mul_table, ctx.inv_table, ctx.neg_table, ncols)


def reduce_rows(rows: np.ndarray, basis: np.ndarray, pivots, ctx) -> None:
    piv = np.ascontiguousarray(pivots, dtype=np.intp)
    _kernels.reduce_rows(rows, np.ascontiguousarray(basis), piv, ctx.add_table, ctx.mul_table, ctx.neg_table)


def subst_quadratic(E, cols, pair, slot, D, sup_ptr, sup_idx, ext, p: int) -> np.ndarray:
    return _kernels.subst_quadratic(E, cols, pair, slot, D, sup_ptr, sup_idx, ext, p)
