# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Gauss-Jordan elimination over F_q on uint8 code matrices.

Field arithmetic goes through the q x q addition/multiplication tables of a
FieldCtx, so one kernel serves prime and extension fields alike.
"""

import numpy as np


def rref_inplace(unsigned char[:, ::1] m,
                 const unsigned char[:, ::1] add,
                 const unsigned char[:, ::1] mul,
                 const unsigned char[::1] inv,
                 const unsigned char[::1] neg,
                 Py_ssize_t ncols=-1):
    """Reduce ``m`` to reduced row echelon form in place.

    Only the first ``ncols`` columns are eligible as pivots (all by default);
    row operations always span the full width.  Returns the pivot columns.
    """
    cdef Py_ssize_t nrows = m.shape[0], width = m.shape[1]
    cdef Py_ssize_t r, i, j, col, prow = 0, piv
    cdef unsigned char c, s
    cdef unsigned char tmp
    cdef const unsigned char* addrow
    cdef const unsigned char* mulrow
    cdef unsigned char* src
    cdef unsigned char* dst
    if ncols < 0 or ncols > width:
        ncols = width
    pivots = []
    for col in range(ncols):
        if prow >= nrows:
            break
        piv = -1
        for r in range(prow, nrows):
            if m[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != prow:
            for j in range(col, width):
                tmp = m[piv, j]
                m[piv, j] = m[prow, j]
                m[prow, j] = tmp
        src = &m[prow, 0]
        c = src[col]
        if c != 1:
            mulrow = &mul[inv[c], 0]
            for j in range(col, width):
                src[j] = mulrow[src[j]]
        for i in range(nrows):
            if i == prow:
                continue
            dst = &m[i, 0]
            c = dst[col]
            if c == 0:
                continue
            mulrow = &mul[neg[c], 0]
            for j in range(col, width):
                s = src[j]
                if s != 0:
                    dst[j] = add[dst[j], mulrow[s]]
        pivots.append(col)
        prow += 1
    return pivots


def reduce_rows(unsigned char[:, ::1] rows,
                const unsigned char[:, ::1] basis,
                const Py_ssize_t[::1] piv,
                const unsigned char[:, ::1] add,
                const unsigned char[:, ::1] mul,
                const unsigned char[::1] neg):
    """Reduce each row of ``rows`` modulo an RREF ``basis`` in place."""
    cdef Py_ssize_t nr = rows.shape[0], width = rows.shape[1]
    cdef Py_ssize_t nb = basis.shape[0]
    cdef Py_ssize_t i, b, j, col
    cdef unsigned char c, s
    cdef const unsigned char* mulrow
    cdef const unsigned char* src
    cdef unsigned char* dst
    for i in range(nr):
        dst = &rows[i, 0]
        for b in range(nb):
            col = piv[b]
            c = dst[col]
            if c == 0:
                continue
            src = &basis[b, 0]
            mulrow = &mul[neg[c], 0]
            for j in range(col, width):
                s = src[j]
                if s != 0:
                    dst[j] = add[dst[j], mulrow[s]]


def subst_quadratic(const long long[:, ::1] E,
                    const Py_ssize_t[::1] cols,
                    const Py_ssize_t[:, ::1] pair,
                    const Py_ssize_t[::1] slot,
                    const long long[:, ::1] D,
                    const Py_ssize_t[::1] sup_ptr,
                    const Py_ssize_t[::1] sup_idx,
                    const Py_ssize_t[:, ::1] ext,
                    long long p):
    """Substitute affine expressions for some variables in dense quadratic rows.

    ``cols`` lists the columns whose monomial ``pair[c] = (i, j)`` (extended
    indices, ``nv`` standing for the constant 1) mentions a substituted
    variable.  ``slot[x]`` is the row of ``D`` holding the expression for
    ``x`` or -1; ``sup_ptr``/``sup_idx`` give each expression's support.
    ``ext[l, l2]`` is the column of the monomial ``x_l x_l2``.
    """
    cdef Py_ssize_t R = E.shape[0], W = E.shape[1], na = cols.shape[0]
    cdef Py_ssize_t r, t, c, i, j, si, sj, a0, a1, b0, b1, u, w, l, l2
    cdef long long a, ci, cj
    out_arr = np.array(E, dtype=np.int64, copy=True)
    cdef long long[:, ::1] out = out_arr
    for r in range(R):
        for t in range(na):
            c = cols[t]
            a = E[r, c]
            if a == 0:
                continue
            out[r, c] -= a
            i = pair[c, 0]
            j = pair[c, 1]
            si = slot[i]
            sj = slot[j]
            if si >= 0:
                a0 = sup_ptr[si]; a1 = sup_ptr[si + 1]
            else:
                a0 = 0; a1 = 1
            if sj >= 0:
                b0 = sup_ptr[sj]; b1 = sup_ptr[sj + 1]
            else:
                b0 = 0; b1 = 1
            for u in range(a0, a1):
                if si >= 0:
                    l = sup_idx[u]; ci = D[si, l]
                else:
                    l = i; ci = 1
                for w in range(b0, b1):
                    if sj >= 0:
                        l2 = sup_idx[w]; cj = D[sj, l2]
                    else:
                        l2 = j; cj = 1
                    out[r, ext[l, l2]] += (a * ci % p) * cj
        for c in range(W):
            out[r, c] %= p
            if out[r, c] < 0:
                out[r, c] += p
    return out_arr
