"""Pure numpy versions of the elimination kernels in ``_rref.pyx``.

Signatures and results match the compiled kernels bit for bit; only speed
differs.  Elimination is vectorised per pivot column.
"""

from __future__ import annotations

import numpy as np


def rref_inplace(m, add, mul, inv, neg, ncols=-1):
    nrows, width = m.shape
    if ncols < 0 or ncols > width:
        ncols = width
    pivots = []
    prow = 0
    for col in range(ncols):
        if prow >= nrows:
            break
        nz = np.flatnonzero(m[prow:, col])
        if nz.size == 0:
            continue
        piv = prow + int(nz[0])
        if piv != prow:
            m[[prow, piv], col:] = m[[piv, prow], col:]
        c = m[prow, col]
        if c != 1:
            m[prow, col:] = mul[inv[c], m[prow, col:]]
        src = m[prow, col:]
        others = np.flatnonzero(m[:, col])
        others = others[others != prow]
        if others.size:
            factors = neg[m[others, col]]
            m[others, col:] = add[m[others, col:], mul[factors[:, None], src[None, :]]]
        pivots.append(col)
        prow += 1
    return pivots


def reduce_rows(rows, basis, pivots, add, mul, neg):
    for b, col in enumerate(pivots):
        c = rows[:, col]
        hit = np.flatnonzero(c)
        if hit.size == 0:
            continue
        factors = neg[c[hit]]
        rows[hit, col:] = add[rows[hit, col:], mul[factors[:, None], basis[b, col:][None, :]]]


def subst_quadratic(E, cols, pair, slot, D, sup_ptr, sup_idx, ext, p):
    out = np.array(E, dtype=np.int64, copy=True)
    if len(cols) == 0:
        return out % p
    m = ext.shape[0]
    # expression of each extended index as a dense vector
    expr = np.eye(m, dtype=np.int64)
    subs = np.flatnonzero(slot >= 0)
    expr[subs] = D[slot[subs]]
    Wm = np.zeros((len(cols), E.shape[1]), dtype=np.float64)
    for t, c in enumerate(cols):
        i, j = pair[c]
        np.add.at(Wm[t], ext.ravel(), np.outer(expr[i], expr[j]).ravel())
    Wm %= p
    A = out[:, cols].astype(np.float64)
    out[:, cols] = 0
    out += np.rint(A @ Wm).astype(np.int64)
    return out % p
