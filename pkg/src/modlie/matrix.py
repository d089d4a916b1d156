"""Dense exact linear algebra over a :class:`~modlie.field.FieldCtx`.

Matrices and vectors are ``uint8`` arrays of field codes.  :class:`Mat` is a
thin wrapper that carries the context; the module-level functions accept
either a :class:`Mat` or a ``(ctx, array)`` pair.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import _backend
from .field import FieldCtx, FieldElem, UniPoly

# Tall systems are reduced in blocks of this many rows past the current basis.
_BLOCK_ROWS = 2048


class MatrixError(ValueError):
    pass


def as_codes(ctx: FieldCtx, rows) -> np.ndarray:
    """Coerce nested ints / FieldElems into a uint8 code array."""
    if isinstance(rows, np.ndarray):
        if rows.dtype == np.uint8:
            return rows
        return (rows.astype(np.int64) % ctx.p).astype(np.uint8) if ctx.k == 1 else rows.astype(np.uint8)
    arr = np.array(
        [[c.value if isinstance(c, FieldElem) else ctx.from_int(c) for c in row] for row in rows],
        dtype=np.uint8,
    )
    return arr


class Mat:
    """Dense matrix over F_q."""

    __slots__ = ("ctx", "data")

    def __init__(self, ctx: FieldCtx, data):
        self.ctx = ctx
        arr = np.ascontiguousarray(data, dtype=np.uint8)
        if arr.ndim != 2:
            raise MatrixError("matrix data must be two-dimensional")
        self.data = arr

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows: Sequence[Sequence]) -> "Mat":
        return cls(ctx, as_codes(ctx, rows))

    @classmethod
    def zeros(cls, ctx: FieldCtx, r: int, c: int) -> "Mat":
        return cls(ctx, np.zeros((r, c), dtype=np.uint8))

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "Mat":
        return cls(ctx, np.eye(n, dtype=np.uint8))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __getitem__(self, ij) -> FieldElem:
        return FieldElem(self.ctx, int(self.data[ij]))

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.ctx == other.ctx
            and self.shape == other.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self):
        return hash((self.ctx, self.shape, self.data.tobytes()))

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise MatrixError(f"shape mismatch {self.shape} @ {other.shape}")
        return Mat(self.ctx, self.ctx.matmul(self.data, other.data))

    def __add__(self, other: "Mat") -> "Mat":
        return Mat(self.ctx, self.ctx.vadd(self.data, other.data))

    def __sub__(self, other: "Mat") -> "Mat":
        return Mat(self.ctx, self.ctx.vsub(self.data, other.data))

    def __neg__(self) -> "Mat":
        return Mat(self.ctx, self.ctx.vneg(self.data))

    def scale(self, c: int | FieldElem) -> "Mat":
        c = c.value if isinstance(c, FieldElem) else c
        return Mat(self.ctx, self.ctx.vmul(self.data, c))

    @property
    def T(self) -> "Mat":
        return Mat(self.ctx, self.data.T)

    def is_zero(self) -> bool:
        return not self.data.any()

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def format_rows(self) -> list[list[str]]:
        return [[self.ctx.format(int(v)) for v in row] for row in self.data]

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols} over F_{self.ctx.q})"


# ---------------------------------------------------------------------------
# Elimination


def rref_codes(ctx: FieldCtx, a: np.ndarray, ncols: int = -1) -> tuple[np.ndarray, list[int]]:
    """RREF of a code array; returns ``(reduced copy, pivots)``.

    Tall inputs are processed in row blocks so the working set stays near
    ``rank + _BLOCK_ROWS`` rows; the result is identical to a one-shot
    Gauss-Jordan pass since RREF is unique.
    """
    a = np.ascontiguousarray(a, dtype=np.uint8)
    nrows, width = a.shape
    limit = max(_BLOCK_ROWS, 2 * width)
    if nrows <= limit:
        m = a.copy()
        piv = _backend.rref_inplace(m, ctx, ncols)
        return m, piv
    basis = np.zeros((0, width), dtype=np.uint8)
    piv: list[int] = []
    for start in range(0, nrows, _BLOCK_ROWS):
        block = a[start:start + _BLOCK_ROWS].copy()
        if piv:
            _backend.reduce_rows(block, basis, piv, ctx)
        block = block[block.any(axis=1)]
        if block.shape[0] == 0:
            continue
        m = np.ascontiguousarray(np.vstack([basis, block]))
        piv = _backend.rref_inplace(m, ctx, ncols)
        basis = np.ascontiguousarray(m[: len(piv)])
    out = np.zeros((nrows, width), dtype=np.uint8)
    out[: len(piv)] = basis
    return out, piv


def rref(m: Mat) -> tuple[Mat, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns."""
    red, piv = rref_codes(m.ctx, m.data)
    return Mat(m.ctx, red), len(piv), piv


def rank(m: Mat) -> int:
    return len(rref_codes(m.ctx, m.data)[1])


def kernel_codes(ctx: FieldCtx, a: np.ndarray) -> np.ndarray:
    """Canonical (RREF) basis of the right null space, one vector per row."""
    a = np.asarray(a, dtype=np.uint8)
    ncols = a.shape[1]
    red, piv = rref_codes(ctx, a)
    free = [c for c in range(ncols) if c not in set(piv)]
    if not free:
        return np.zeros((0, ncols), dtype=np.uint8)
    basis = np.zeros((len(free), ncols), dtype=np.uint8)
    pivrows = red[: len(piv)]
    for idx, f in enumerate(free):
        basis[idx, f] = 1
        if piv:
            basis[idx, piv] = ctx.vneg(pivrows[:, f])
    # free-variable vectors, once put in RREF, give the unique canonical basis
    red_basis, _ = rref_codes(ctx, basis)
    return red_basis[: len(free)]


def kernel(m: Mat) -> "Subspace":
    return Subspace(m.ctx, m.cols, kernel_codes(m.ctx, m.data), reduced=True)


def solve_codes(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """One solution ``x`` of ``a x = b`` (free variables zero), or ``None``."""
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    squeeze = b.ndim == 1
    if squeeze:
        b = b[:, None]
    n = a.shape[1]
    aug = np.ascontiguousarray(np.hstack([a, b]))
    red, piv = rref_codes(ctx, aug, ncols=n)
    r = len(piv)
    if red[r:, n:].any():
        return None
    x = np.zeros((n, b.shape[1]), dtype=np.uint8)
    x[piv] = red[:r, n:]
    return x[:, 0] if squeeze else x


def solve(m: Mat, b) -> np.ndarray | None:
    return solve_codes(m.ctx, m.data, as_vector(m.ctx, b))


def as_vector(ctx: FieldCtx, v) -> np.ndarray:
    if isinstance(v, np.ndarray):
        return v.astype(np.uint8, copy=False)
    return np.array([c.value if isinstance(c, FieldElem) else ctx.from_int(c) for c in v], dtype=np.uint8)


# ---------------------------------------------------------------------------
# Subspaces


class Subspace:
    """Subspace of F_q^n held by its unique RREF basis (rows)."""

    __slots__ = ("ctx", "n", "basis", "pivots")

    def __init__(self, ctx: FieldCtx, n: int, vectors=None, reduced: bool = False):
        self.ctx = ctx
        self.n = n
        if vectors is None:
            vecs = np.zeros((0, n), dtype=np.uint8)
        else:
            vecs = np.asarray(vectors, dtype=np.uint8)
            if n == 0:
                vecs = np.zeros((0, 0), dtype=np.uint8)
            elif vecs.ndim != 2:
                vecs = vecs.reshape(-1, n)
        if reduced:
            basis = np.ascontiguousarray(vecs)
            self.pivots = [int(np.flatnonzero(row)[0]) for row in basis]
        else:
            red, piv = rref_codes(ctx, vecs) if vecs.shape[0] else (vecs, [])
            basis = np.ascontiguousarray(red[: len(piv)])
            self.pivots = list(piv)
        basis.setflags(write=False)
        self.basis = basis

    @classmethod
    def zero(cls, ctx: FieldCtx, n: int) -> "Subspace":
        return cls(ctx, n)

    @classmethod
    def full(cls, ctx: FieldCtx, n: int) -> "Subspace":
        return cls(ctx, n, np.eye(n, dtype=np.uint8), reduced=True)

    @classmethod
    def span(cls, ctx: FieldCtx, n: int, vectors: Iterable) -> "Subspace":
        vecs = [as_vector(ctx, v) for v in vectors]
        if not vecs:
            return cls.zero(ctx, n)
        return cls(ctx, n, np.vstack(vecs))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.n

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """Remainder of vectors (rows) modulo this subspace."""
        v = np.array(v, dtype=np.uint8, copy=True)
        single = v.ndim == 1
        rows = np.ascontiguousarray(v.reshape(-1, self.n) if self.n else v.reshape(v.shape[0] if v.ndim == 2 else 1, 0))
        if self.dim:
            _backend.reduce_rows(rows, self.basis, self.pivots, self.ctx)
        return rows[0] if single else rows

    def contains(self, v) -> bool:
        return not self.reduce(as_vector(self.ctx, v) if not isinstance(v, np.ndarray) else v).any()

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def coords(self, v: np.ndarray) -> np.ndarray:
        """Coordinates of vectors already in the span, w.r.t. the RREF basis."""
        v = np.asarray(v, dtype=np.uint8)
        return v[..., self.pivots]

    def __le__(self, other: "Subspace") -> bool:
        if self.dim == 0:
            return True
        return not other.reduce(self.basis).any()

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.n == other.n
            and self.ctx == other.ctx
            and bool(np.array_equal(self.basis, other.basis))
        )

    def __hash__(self):
        return hash((self.ctx, self.n, self.basis.tobytes()))

    def __add__(self, other: "Subspace") -> "Subspace":
        if other.dim == 0:
            return self
        if self.dim == 0:
            return other
        return Subspace(self.ctx, self.n, np.vstack([self.basis, other.basis]))

    def __and__(self, other: "Subspace") -> "Subspace":
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ctx, self.n)
        # x = a A = b B  <=>  [a | b] [A ; -B] = 0
        stacked = np.vstack([self.basis, self.ctx.vneg(other.basis)])
        ker = kernel_codes(self.ctx, np.ascontiguousarray(stacked.T))
        if ker.shape[0] == 0:
            return Subspace.zero(self.ctx, self.n)
        vecs = self.ctx.matmul(ker[:, : self.dim], self.basis)
        return Subspace(self.ctx, self.n, vecs)

    def complement_coords(self) -> list[int]:
        """Coordinates not occupied by pivots (a canonical complement)."""
        piv = set(self.pivots)
        return [i for i in range(self.n) if i not in piv]

    def __repr__(self):
        return f"Subspace(dim {self.dim} in F_{self.ctx.q}^{self.n})"


# ---------------------------------------------------------------------------
# Characteristic polynomials and eigenspaces


def charpoly(m: Mat) -> UniPoly:
    """Characteristic polynomial ``det(X I - m)`` by Berkowitz's algorithm.

    Division free, so valid in every characteristic.  The matrix is peeled
    from the bottom-right corner: with ``A = [[a, R], [C, M]]`` the
    coefficient vector of ``A`` is the Toeplitz product of
    ``(1, -a, -RC, -RMC, ..., -R M^(k-2) C)`` with that of ``M``.
    """
    if m.rows != m.cols:
        raise MatrixError("characteristic polynomial of a non-square matrix")
    ctx = m.ctx
    a = m.data
    n = a.shape[0]
    if n == 0:
        return UniPoly(ctx, [1])
    # coefficients highest degree first
    poly = [1, ctx.neg(int(a[n - 1, n - 1]))]
    for i in range(n - 2, -1, -1):
        k = n - i  # size of the current block
        R = a[i, i + 1:].reshape(1, -1)
        C = a[i + 1:, i].reshape(-1, 1)
        M = a[i + 1:, i + 1:]
        t = [1, ctx.neg(int(a[i, i]))]
        vec = C
        for _ in range(k - 1):
            t.append(ctx.neg(int(ctx.matmul(R, vec)[0, 0])))
            vec = ctx.matmul(M, vec)
        new = []
        for d in range(k + 1):
            acc = 0
            for j in range(max(0, d - len(poly) + 1), min(d, len(t) - 1) + 1):
                acc = ctx.add(acc, ctx.mul(t[j], poly[d - j]))
            new.append(acc)
        poly = new
    return UniPoly(ctx, list(reversed(poly)))


def mat_pow(m: Mat, e: int) -> Mat:
    ctx = m.ctx
    result = np.eye(m.rows, dtype=np.uint8)
    base = m.data
    while e:
        if e & 1:
            result = ctx.matmul(result, base)
        base = ctx.matmul(base, base)
        e >>= 1
    return Mat(ctx, result)


def gen_eigenspace(m: Mat, alpha: int | FieldElem) -> Subspace:
    """Kernel of ``(m - alpha I)^n`` on column vectors."""
    if m.rows != m.cols:
        raise MatrixError("eigenspace of a non-square matrix")
    ctx = m.ctx
    a = alpha.value if isinstance(alpha, FieldElem) else alpha
    n = m.rows
    shifted = Mat(ctx, ctx.vsub(m.data, ctx.vmul(np.eye(n, dtype=np.uint8), a)))
    return kernel(mat_pow(shifted, n))


def det_cofactor(ctx: FieldCtx, a: np.ndarray) -> int:
    """Determinant by cofactor expansion; only for tiny oracle checks."""
    n = a.shape[0]
    if n == 0:
        return 1
    if n == 1:
        return int(a[0, 0])
    total = 0
    for j in range(n):
        c = int(a[0, j])
        if not c:
            continue
        minor = np.delete(np.delete(a, 0, axis=0), j, axis=1)
        term = ctx.mul(c, det_cofactor(ctx, minor))
        total = ctx.add(total, term) if j % 2 == 0 else ctx.sub(total, term)
    return total
