"""Named Lie algebras: matrix algebras, Cartan-type algebras and small tables."""

from __future__ import annotations

import itertools

import numpy as np

from .field import FieldCtx, ff_make
from .lie import LieAlgebra, LieError, center, quotient, series, subalgebra, validate


class ConstructError(ValueError):
    pass


def _checked(g: LieAlgebra) -> LieAlgebra:
    rep = validate(g)
    if not rep:
        raise ConstructError(f"constructed algebra failed validation: {rep.message}")
    return g


def _from_matrices(ctx: FieldCtx, mats: list[np.ndarray], labels, certificate=None) -> LieAlgebra:
    """Structure constants of a matrix Lie algebra given by a basis of matrices.

    Commutators are expressed in the basis by solving one linear system.
    """
    from .matrix import solve_codes

    n = len(mats)
    B = np.stack([m.reshape(-1) for m in mats], axis=1)  # (N*N, n)
    C = np.zeros((n, n, n), dtype=np.uint8)
    comms = []
    for i, j in itertools.combinations(range(n), 2):
        a, b = mats[i], mats[j]
        comms.append(ctx.vsub(ctx.matmul(a, b), ctx.matmul(b, a)).reshape(-1))
    if comms:
        X = solve_codes(ctx, B, np.stack(comms, axis=1))
        if X is None:
            raise ConstructError("matrix basis is not closed under commutators")
        for idx, (i, j) in enumerate(itertools.combinations(range(n), 2)):
            C[i, j] = X[:, idx]
            C[j, i] = ctx.vneg(X[:, idx])
    return _checked(LieAlgebra(ctx, C, labels, certificate))


def _unit(N: int, i: int, j: int) -> np.ndarray:
    m = np.zeros((N, N), dtype=np.uint8)
    m[i, j] = 1
    return m


def gl(n: int, ctx: FieldCtx) -> LieAlgebra:
    """``gl(n)`` on ``E_ij`` in row-major order."""
    if n < 1:
        raise ConstructError("gl(n) needs n >= 1")
    mats, labels = [], []
    for i in range(n):
        for j in range(n):
            mats.append(_unit(n, i, j))
            labels.append(f"E{i + 1}{j + 1}")
    return _from_matrices(ctx, mats, labels)


def sl(n: int, ctx: FieldCtx) -> LieAlgebra:
    """``sl(n)``: off-diagonal ``E_ij`` row-major, then ``E_ii - E_(i+1)(i+1)``."""
    if n < 2:
        raise ConstructError("sl(n) needs n >= 2")
    mats, labels = [], []
    for i in range(n):
        for j in range(n):
            if i != j:
                mats.append(_unit(n, i, j))
                labels.append(f"E{i + 1}{j + 1}")
    minus_one = ctx.neg(1)
    for i in range(n - 1):
        h = _unit(n, i, i)
        h[i + 1, i + 1] = minus_one
        mats.append(h)
        labels.append(f"H{i + 1}")
    simple = n > 2 or ctx.p != 2
    cert = "known simple" if simple and (n % ctx.p) != 0 else None
    return _from_matrices(ctx, mats, labels, cert)


def psl(n: int, ctx: FieldCtx) -> LieAlgebra:
    """``sl(n)`` modulo its centre (which is nonzero exactly when ``p | n``)."""
    s = sl(n, ctx)
    z = center(s)
    if z.dim == 0:
        return s
    q, _ = quotient(s, z)
    q.labels = [f"e{i + 1}" for i in range(q.n)]
    if not (ctx.p == 2 and n == 2):
        q.certificate = "known simple"
    return _checked(q)


# ---------------------------------------------------------------------------
# Truncated polynomial algebras and Cartan type


class TruncatedPolyAlgebra:
    """``O(m;1)``: polynomials in ``m`` variables with ``x_i^p = 0``.

    Monomials are exponent tuples in lexicographic order, which is also the
    basis order.
    """

    def __init__(self, p: int, m: int):
        self.p = p
        self.m = m
        self.monomials = list(itertools.product(range(p), repeat=m))
        self.index = {a: i for i, a in enumerate(self.monomials)}

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def mul(self, a: tuple[int, ...], b: tuple[int, ...]):
        c = tuple(x + y for x, y in zip(a, b))
        return None if any(x >= self.p for x in c) else c

    def deriv(self, a: tuple[int, ...], i: int):
        """``d/dx_i x^a`` as ``(coefficient, monomial)`` or ``None``."""
        if a[i] == 0:
            return None
        b = list(a)
        b[i] -= 1
        return a[i] % self.p, tuple(b)

    def label(self, a: tuple[int, ...], names="xyzuvw") -> str:
        parts = []
        for v, e in zip(names, a):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "".join(parts) or "1"


def jacobson_witt(m: int, ctx: FieldCtx) -> LieAlgebra:
    """``W(m;1)`` with basis ``x^a d_i``, monomial-major."""
    if ctx.k != 1:
        raise ConstructError("jacobson_witt needs a prime field")
    if m < 1:
        raise ConstructError("jacobson_witt needs m >= 1")
    p = ctx.p
    A = TruncatedPolyAlgebra(p, m)
    basis = [(a, i) for a in A.monomials for i in range(m)]
    index = {b: k for k, b in enumerate(basis)}
    n = len(basis)
    C = np.zeros((n, n, n), dtype=np.int64)
    for s, (a, i) in enumerate(basis):
        for t, (b, j) in enumerate(basis):
            # [x^a d_i, x^b d_j] = x^a d_i(x^b) d_j - x^b d_j(x^a) d_i
            d = A.deriv(b, i)
            if d is not None:
                mono = A.mul(a, d[1])
                if mono is not None:
                    C[s, t, index[(mono, j)]] += d[0]
            d = A.deriv(a, j)
            if d is not None:
                mono = A.mul(b, d[1])
                if mono is not None:
                    C[s, t, index[(mono, i)]] -= d[0]
    labels = [f"{A.label(a)}d{i + 1}" for a, i in basis]
    cert = None if (p == 2 and m == 1) else "known simple"
    return _checked(LieAlgebra(ctx, (C % p).astype(np.uint8), labels, cert))


def poisson_algebra(ctx: FieldCtx) -> LieAlgebra:
    """``O(2;1)`` with the Poisson bracket ``{f,g} = f_x g_y - f_y g_x``."""
    p = ctx.p
    A = TruncatedPolyAlgebra(p, 2)
    n = A.dim
    C = np.zeros((n, n, n), dtype=np.int64)
    for s, a in enumerate(A.monomials):
        for t, b in enumerate(A.monomials):
            for i, j, sign in ((0, 1, 1), (1, 0, -1)):
                da, db = A.deriv(a, i), A.deriv(b, j)
                if da is None or db is None:
                    continue
                mono = A.mul(da[1], db[1])
                if mono is not None:
                    C[s, t, A.index[mono]] += sign * da[0] * db[0]
    labels = [A.label(a) for a in A.monomials]
    return LieAlgebra(ctx, (C % p).astype(np.uint8), labels)


def hamiltonian_p2(ctx: FieldCtx) -> LieAlgebra:
    """``H(2;1)^(2)``: Poisson algebra mod constants, then two derived steps."""
    if ctx.k != 1:
        raise ConstructError("hamiltonian_p2 needs a prime field")
    if ctx.p == 2:
        raise ConstructError("hamiltonian_p2 needs p >= 3")
    P = poisson_algebra(ctx)
    from .matrix import Subspace

    consts = Subspace(ctx, P.n, np.eye(P.n, dtype=np.uint8)[:1], reduced=True)
    Q, _ = quotient(P, consts)
    terms = series(Q, "derived").terms
    # the series stops once a term repeats, so a perfect first step is also the second
    sec = terms[min(2, len(terms) - 1)]
    H = subalgebra(Q, sec)
    # each RREF basis row has a leading monomial; use it as the label
    H.labels = [Q.labels[piv] for piv in sec.pivots]
    H.certificate = "known simple"
    return _checked(H)


# ---------------------------------------------------------------------------
# Small explicit tables (1-based indices as printed)

_W3 = {(1, 2): {3: 1}, (1, 3): {1: 1}, (2, 3): {2: 1}}

_G6 = {
    (1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {5: 1}, (1, 5): {2: 1, 4: 1},
    (2, 3): {1: 1}, (2, 5): {1: 1, 6: 1}, (2, 6): {3: 1, 5: 1}, (3, 4): {1: 1, 6: 1},
    (3, 6): {2: 1}, (4, 5): {6: 1}, (4, 6): {3: 1}, (5, 6): {4: 1},
}

_PSL3F3 = {
    (1, 3): {7: 1}, (1, 4): {2: 1}, (1, 5): {6: -1}, (1, 7): {1: -2},
    (2, 3): {4: -1}, (2, 5): {7: 2}, (2, 6): {1: 1}, (2, 7): {2: -1},
    (3, 6): {5: -1}, (3, 7): {3: 2}, (4, 5): {3: 1}, (4, 6): {7: 1},
    (4, 7): {4: 1}, (5, 7): {5: 1}, (6, 7): {6: -1},
}

BUILTINS = ("w3", "g6", "psl3f3-table")


def _table(ctx: FieldCtx, n: int, table, labels, cert) -> LieAlgebra:
    sc = {}
    for (i, j), terms in table.items():
        v = [0] * n
        for k, c in terms.items():
            v[k - 1] = c
        sc[(i - 1, j - 1)] = v
    return _checked(LieAlgebra.from_brackets(ctx, n, sc, labels, cert))


def builtin(name: str) -> LieAlgebra:
    if name == "w3":
        return _table(ff_make(2), 3, _W3, ["e", "f", "h"], "known simple")
    if name == "g6":
        return _table(ff_make(2), 6, _G6, [f"x{i}" for i in range(1, 7)], "known simple")
    if name == "psl3f3-table":
        return _table(ff_make(3), 7, _PSL3F3, [f"e{i}" for i in range(1, 8)], "known simple")
    raise ConstructError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}")


def g6_alpha_product(ctx: FieldCtx, alpha: int) -> np.ndarray:
    """The one-parameter family of symmetric products on ``g6`` over a field of characteristic 2.

    Returns the tensor ``D[i, j, k]`` of ``x_i . x_j``; ``alpha`` is a code in ``ctx``.
    """
    if ctx.p != 2:
        raise ConstructError("the g6 product family lives in characteristic 2")
    a = alpha
    a2 = ctx.mul(a, a)
    aa1 = ctx.mul(a, ctx.add(a, 1))
    table = {
        (1, 2): {3: a, 5: aa1}, (1, 3): {2: aa1, 4: a2}, (1, 4): {3: aa1, 5: a2},
        (1, 5): {2: a2, 4: a}, (2, 3): {1: a2, 6: aa1}, (2, 5): {1: a, 6: a2},
        (2, 6): {3: a2, 5: a}, (3, 4): {1: a, 6: a2}, (3, 6): {2: a, 4: aa1},
        (4, 5): {1: aa1, 6: a}, (4, 6): {3: a, 5: aa1}, (5, 6): {2: aa1, 4: a2},
    }
    D = np.zeros((6, 6, 6), dtype=np.uint8)
    for (i, j), terms in table.items():
        for k, c in terms.items():
            D[i - 1, j - 1, k - 1] = c
            D[j - 1, i - 1, k - 1] = c
    return D


def make(kind: str, n: int | None, ctx: FieldCtx | None) -> LieAlgebra:
    """Dispatch used by the command line."""
    if kind == "builtin":
        raise ConstructError("use builtin(name) for tables")
    if ctx is None:
        raise ConstructError(f"{kind} needs a field")
    if kind in ("gl", "sl", "psl", "witt") and n is None:
        raise ConstructError(f"{kind} needs a size argument")
    if kind == "gl":
        return gl(n, ctx)
    if kind == "sl":
        return sl(n, ctx)
    if kind == "psl":
        return psl(n, ctx)
    if kind == "witt":
        return jacobson_witt(n, ctx)
    if kind == "hamiltonian":
        return hamiltonian_p2(ctx)
    raise ConstructError(f"unknown algebra kind {kind!r}")


__all__ = [
    "ConstructError", "TruncatedPolyAlgebra", "gl", "sl", "psl", "jacobson_witt",
    "poisson_algebra", "hamiltonian_p2", "builtin", "BUILTINS", "g6_alpha_product", "make", "LieError",
]
