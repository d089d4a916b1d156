"""Commutative post-Lie algebra (CPA) structures.

A CPA structure on ``g`` is a symmetric bilinear product ``x.y`` with

* ``[x,y].z = x.(y.z) - y.(x.z)``             (the quadratic axiom)
* ``x.[y,z] = [x.y, z] + [y, x.z]``           (the linear axiom)

The linear axiom says every left multiplication ``L(x)`` is a derivation,
which is how the linear stage is computed.  The quadratic axiom is then
imposed on the general element of the linear solution space and solved
exhaustively.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .field import BudgetExceeded, FieldCtx, poly_roots, splitting_extension
from .lie import LieAlgebra, bracket, center, change_field, g_inf_lower, is_ideal, product_space
from .matrix import Mat, Subspace, charpoly, gen_eigenspace, kernel_codes, rref_codes, solve_codes
from .polysolve import DEFAULT_NODE_BUDGET, MultiPoly, PolySystem, solve_all

DEFAULT_LINEAR_LIMIT = 24
ENLARGED_LINEAR_LIMIT = 64


class CpaError(RuntimeError):
    pass


def f(n: int) -> int:
    """Exponent in the iterated commutator formula: ``f(1) = 1``, ``f(n+1) = 2 f(n) + 1``."""
    if n < 1:
        raise ValueError("f is defined for n >= 1")
    return 2**n - 1


def _pair_index(n: int) -> np.ndarray:
    idx = np.full((n, n), -1, dtype=np.int64)
    for c, (i, j) in enumerate(itertools.combinations_with_replacement(range(n), 2)):
        idx[i, j] = idx[j, i] = c
    return idx


def _upper(n: int):
    return np.triu_indices(n)


# ---------------------------------------------------------------------------
# Products


class SymProduct:
    """Symmetric product on ``base``; ``D[i, j, k]`` is the ``e_k`` coefficient of ``e_i . e_j``."""

    __slots__ = ("base", "D")

    def __init__(self, base: LieAlgebra, D: np.ndarray):
        n = base.n
        D = np.ascontiguousarray(D, dtype=np.uint8)
        if D.shape != (n, n, n):
            raise CpaError(f"product tensor must be {n} x {n} x {n}")
        if not np.array_equal(D, D.transpose(1, 0, 2)):
            raise CpaError("product tensor is not symmetric")
        D.setflags(write=False)
        self.base = base
        self.D = D

    @classmethod
    def from_products(cls, base: LieAlgebra, sc: dict) -> "SymProduct":
        """From ``{(i, j): coords of e_i . e_j}``; each unordered pair at most once."""
        from .matrix import as_vector

        n = base.n
        D = np.zeros((n, n, n), dtype=np.uint8)
        seen = set()
        for (i, j), vec in sc.items():
            key = (min(i, j), max(i, j))
            if key in seen:
                raise CpaError(f"product of e{key[0] + 1}, e{key[1] + 1} given twice")
            seen.add(key)
            v = as_vector(base.ctx, vec)
            D[i, j] = v
            D[j, i] = v
        return cls(base, D)

    @classmethod
    def zero(cls, base: LieAlgebra) -> "SymProduct":
        return cls(base, np.zeros((base.n,) * 3, dtype=np.uint8))

    @classmethod
    def adjoint(cls, base: LieAlgebra) -> "SymProduct":
        """``x.y = [x,y]`` read off the upper triangle (symmetric only in characteristic 2)."""
        n = base.n
        D = np.zeros((n, n, n), dtype=np.uint8)
        iu, ju = _upper(n)
        D[iu, ju] = base.C[iu, ju]
        D[ju, iu] = base.C[iu, ju]
        return cls(base, D)

    @classmethod
    def inner(cls, base: LieAlgebra, phi: np.ndarray) -> "SymProduct":
        """``x.y = [phi x, y]``; raises if that is not symmetric."""
        ctx, n = base.ctx, base.n
        # e_i . e_j = sum_m phi[m, i] C[m, j, :]
        D = ctx.matmul(np.ascontiguousarray(np.asarray(phi, np.uint8).T), base.C.reshape(n, n * n)).reshape(n, n, n)
        return cls(base, D)

    @property
    def ctx(self) -> FieldCtx:
        return self.base.ctx

    @property
    def sc(self) -> dict[tuple[int, int], np.ndarray]:
        n = self.base.n
        return {(i, j): self.D[i, j].copy() for i, j in itertools.combinations_with_replacement(range(n), 2)
                if self.D[i, j].any()}

    def is_zero(self) -> bool:
        return not self.D.any()

    def product(self, x, y) -> np.ndarray:
        ctx, n = self.ctx, self.base.n
        x = np.asarray(x, dtype=np.uint8)
        y = np.asarray(y, dtype=np.uint8)
        outer = ctx.vmul(x[:, None], y[None, :]).reshape(1, n * n)
        return ctx.matmul(outer, self.D.reshape(n * n, n))[0]

    def left(self, i: int) -> np.ndarray:
        """``L(e_i)`` as a matrix acting on columns."""
        return np.ascontiguousarray(self.D[i].T)

    def sym_coords(self) -> np.ndarray:
        iu, ju = _upper(self.base.n)
        return self.D[iu, ju].reshape(-1)

    @classmethod
    def from_sym_coords(cls, base: LieAlgebra, v: np.ndarray) -> "SymProduct":
        n = base.n
        iu, ju = _upper(n)
        D = np.zeros((n, n, n), dtype=np.uint8)
        rows = np.asarray(v, dtype=np.uint8).reshape(len(iu), n)
        D[iu, ju] = rows
        D[ju, iu] = rows
        return cls(base, D)

    def __eq__(self, other):
        return isinstance(other, SymProduct) and self.base == other.base and np.array_equal(self.D, other.D)

    def __hash__(self):
        return hash(self.D.tobytes())

    def _key(self):
        return tuple(self.sym_coords().tolist())

    def format_lines(self, labels: list[str] | None = None) -> list[str]:
        """Lines like ``x1.x2 = t*x3 + x5`` (nonzero products only)."""
        ctx = self.ctx
        labels = labels or self.base.labels
        out = []
        for (i, j), vec in self.sc.items():
            terms = []
            for k in np.flatnonzero(vec):
                c = int(vec[k])
                lit = ctx.format(c)
                if ctx.k > 1 and any(ch in lit for ch in "+^"):
                    lit = f"({lit})"
                terms.append(labels[k] if c == 1 else f"{lit}*{labels[k]}")
            out.append(f"{labels[i]}.{labels[j]} = {' + '.join(terms)}")
        return out

    def __repr__(self):
        return f"SymProduct({'; '.join(self.format_lines()) or '0'})"


# ---------------------------------------------------------------------------
# Axioms


@dataclass
class CpaReport:
    ok: bool
    axiom: str | None = None
    triple: tuple[int, int, int] | None = None
    message: str = ""

    def __bool__(self):
        return self.ok


def _axiom_tensors(g: LieAlgebra, D: np.ndarray):
    ctx, C = g.ctx, g.C
    # linear axiom: x.[y,z] - [x.y,z] - [y,x.z]
    t1 = ctx.einsum("jlm,imk->ijlk", C, D)
    t2 = ctx.einsum("ijm,mlk->ijlk", D, C)
    t3 = ctx.einsum("ilm,jmk->ijlk", D, C)
    lin = ctx.vsub(ctx.vsub(t1, t2), t3)
    # quadratic axiom: [x,y].z - x.(y.z) + y.(x.z)
    s1 = ctx.einsum("abm,mck->abck", C, D)
    s2 = ctx.einsum("bcm,amk->abck", D, D)
    quad = ctx.vadd(ctx.vsub(s1, s2), s2.transpose(1, 0, 2, 3))
    return lin, quad


def is_cpa(g: LieAlgebra, P: SymProduct) -> CpaReport:
    """Check symmetry and both axioms on all basis triples; report the first failure."""
    if P.base.ctx != g.ctx or P.base.n != g.n:
        return CpaReport(False, "domain", None, "product lives on a different algebra")
    D = P.D
    if not np.array_equal(D, D.transpose(1, 0, 2)):
        i, j = (int(v) for v in np.argwhere((D != D.transpose(1, 0, 2)).any(axis=2))[0])
        return CpaReport(False, "commutativity", (i, j, j), "product is not symmetric")
    lin, quad = _axiom_tensors(g, D)
    bad = np.argwhere(quad.any(axis=3))
    if len(bad):
        a, b, c = (int(v) for v in bad[0])
        return CpaReport(False, "[x,y].z = x.(y.z) - y.(x.z)", (a, b, c),
                         f"fails at (e{a + 1}, e{b + 1}, e{c + 1})")
    bad = np.argwhere(lin.any(axis=3))
    if len(bad):
        a, b, c = (int(v) for v in bad[0])
        return CpaReport(False, "x.[y,z] = [x.y,z] + [y,x.z]", (a, b, c),
                         f"fails at (e{a + 1}, e{b + 1}, e{c + 1})")
    return CpaReport(True)


# ---------------------------------------------------------------------------
# Linear stage


def linear_system_direct(g: LieAlgebra) -> np.ndarray:
    """Linear-axiom rows over the symmetric coordinates ``pair(i<=j)*n + k``.

    Dense and direct; used as an independent check of :func:`cpa_linear_space`.
    """
    ctx, n, C = g.ctx, g.n, g.C
    pidx = _pair_index(n)
    npairs = n * (n + 1) // 2
    rows = []
    for i in range(n):
        for j, l in itertools.combinations(range(n), 2):
            # e_i.[e_j,e_l] - [e_i.e_j, e_l] - [e_j, e_i.e_l], component k
            block = np.zeros((n, npairs * n), dtype=np.int64)
            for m in np.flatnonzero(C[j, l]):
                c = int(C[j, l, m])
                for k in range(n):
                    block[k, pidx[i, m] * n + k] += c
            for m in range(n):
                for k in np.flatnonzero(C[m, l]):
                    block[k, pidx[i, j] * n + m] -= int(C[m, l, k])
                for k in np.flatnonzero(C[j, m]):
                    block[k, pidx[i, l] * n + m] -= int(C[j, m, k])
            rows.append(block)
    if not rows:
        return np.zeros((0, npairs * n), dtype=np.uint8)
    M = np.vstack(rows)
    if ctx.k == 1:
        return (M % ctx.p).astype(np.uint8)
    # integer coefficients are multiples of structure constants only in prime fields
    raise CpaError("direct system assembly supports prime fields only")


def cpa_linear_space(g: LieAlgebra, d=None) -> Subspace:
    """Symmetric products satisfying the linear axiom, in symmetric coordinates.

    Each ``L(e_i)`` is written in a basis of ``Der(g)``; symmetry
    ``L(e_i) e_j = L(e_j) e_i`` is then a linear system in those weights.
    """
    from .derive import derivations

    ctx, n = g.ctx, g.n
    if d is None:
        d = derivations(g, check=False)
    r = d.dim_der
    npairs = n * (n + 1) // 2
    if r == 0 or n == 0:
        return Subspace.zero(ctx, npairs * n)
    Ds = d.der.basis.reshape(r, n, n)  # Ds[s, k, j]: coefficient of e_k in D_s e_j
    I, J = np.triu_indices(n, 1)
    P = len(I)
    # rows (pair, k), columns i*r + s
    M = np.zeros((P, n, n, r), dtype=np.uint8)
    ar = np.arange(P)
    M[ar, :, I, :] = Ds[:, :, J].transpose(2, 1, 0)
    M[ar, :, J, :] = ctx.vneg(Ds[:, :, I].transpose(2, 1, 0))
    M = np.ascontiguousarray(M.reshape(P * n, n * r))
    K = kernel_codes(ctx, M) if P else np.eye(n * r, dtype=np.uint8)
    if K.shape[0] == 0:
        return Subspace.zero(ctx, npairs * n)
    # product tensor for each kernel vector: T[v, i, j, k] = sum_s c[v, i, s] Ds[s, k, j]
    c = K.reshape(-1, n, r)
    T = ctx.matmul(c.reshape(-1, r), Ds.transpose(0, 2, 1).reshape(r, n * n)).reshape(-1, n, n, n)
    iu, ju = _upper(n)
    sym = T[:, iu, ju, :].reshape(T.shape[0], npairs * n)
    return Subspace(ctx, npairs * n, sym)


# ---------------------------------------------------------------------------
# Quadratic stage


@dataclass
class CpaResult:
    products: list[SymProduct]
    complete: bool
    linear_dim: int
    nodes: int = 0
    nequations: int = 0
    notes: list[str] = field(default_factory=list)

    def __len__(self):
        return len(self.products)


def quadratic_system(g: LieAlgebra, basis: list[np.ndarray]) -> PolySystem:
    """Quadratic axiom on ``sum_s u_s B_s``, reduced to independent rows.

    Monomial columns: ``u_s u_t`` (s <= t, lexicographic) then ``u_s``.
    """
    ctx, n, C = g.ctx, g.n, g.C
    L = len(basis)
    names = [f"u{s}" for s in range(L)]
    if L == 0:
        return PolySystem(ctx, 0, [], names)
    B = np.stack(basis)  # (L, n, n, n)
    I, J = np.triu_indices(n, 1)
    quads = list(itertools.combinations_with_replacement(range(L), 2))
    qcol = {st: c for c, st in enumerate(quads)}
    ncols = len(quads) + L
    R = len(I) * n * n
    M = np.zeros((R, ncols), dtype=np.uint8)
    # linear part: [e_a,e_b].e_c
    lin = ctx.einsum("abm,smck->sabck", C, B)[:, I, J].reshape(L, R)
    M[:, len(quads):] = lin.T
    # quadratic part: -(B_s[b,c,m] B_t[a,m,k] - B_s[a,c,m] B_t[b,m,k])
    for s in range(L):
        E = ctx.einsum("bcm,tamk->tabck", B[s], B)  # E[t, a, b, c, k]
        E = ctx.vsub(E, E.transpose(0, 2, 1, 3, 4))[:, I, J].reshape(L, R)
        for t in range(L):
            col = qcol[(min(s, t), max(s, t))]
            M[:, col] = ctx.vsub(M[:, col], E[t])
    red, piv = rref_codes(ctx, M)
    eqs = []
    for row in red[: len(piv)]:
        terms = {}
        for c in np.flatnonzero(row):
            terms[quads[c] if c < len(quads) else (c - len(quads),)] = int(row[c])
        eqs.append(MultiPoly(ctx, L, terms))
    return PolySystem(ctx, L, eqs, names)


def cpa_all(g: LieAlgebra, budget: int = DEFAULT_NODE_BUDGET,
            linear_limit: int = DEFAULT_LINEAR_LIMIT) -> CpaResult:
    """Every CPA structure on ``g``.

    Raises :class:`BudgetExceeded` when the linear stage leaves more than
    ``linear_limit`` coordinates.
    """
    space = cpa_linear_space(g)
    L = space.dim
    if L > linear_limit:
        raise BudgetExceeded(f"linear stage leaves {L} coordinates (limit {linear_limit})")
    basis = [SymProduct.from_sym_coords(g, v).D for v in space.basis]
    sys = quadratic_system(g, basis)
    sol = solve_all(sys, budget=budget)
    products = []
    for pt in sol.points:
        D = np.zeros((g.n,) * 3, dtype=np.uint8)
        for s, u in enumerate(pt):
            if u:
                D = g.ctx.vadd(D, g.ctx.vmul(basis[s], u))
        P = SymProduct(g, D)
        rep = is_cpa(g, P)
        if not rep:
            raise CpaError(f"solver produced a product violating {rep.axiom}")
        products.append(P)
    products.sort(key=lambda P: P._key())
    notes = [] if sol.complete else ["quadratic search exhausted its node budget"]
    return CpaResult(products, sol.complete, L, sol.nodes, len(sys.equations), notes)


# ---------------------------------------------------------------------------
# Classification


@dataclass
class CpaClassification:
    tag: str
    phi: Mat | None = None
    notes: list[str] = field(default_factory=list)


def is_endomorphism(g: LieAlgebra, phi: np.ndarray) -> bool:
    """``phi [x, y] = [phi x, phi y]`` on basis pairs (``phi`` acts on columns)."""
    ctx, n, C = g.ctx, g.n, g.C
    phiT = np.ascontiguousarray(np.asarray(phi, np.uint8).T)  # row i = phi(e_i)
    lhs = ctx.matmul(C.reshape(n * n, n), phiT)
    T = ctx.matmul(phiT, C.reshape(n, n * n)).reshape(n, n, n)  # [phi e_i, e_m]
    rhs = ctx.matmul(phiT, T.transpose(1, 0, 2).reshape(n, n * n)).reshape(n, n, n).transpose(1, 0, 2)
    return bool(np.array_equal(lhs, rhs.reshape(n * n, n)))


def classify(g: LieAlgebra, P: SymProduct) -> CpaClassification:
    ctx, n = g.ctx, g.n
    if P.is_zero():
        return CpaClassification("Trivial", Mat(ctx, np.zeros((n, n), np.uint8)))
    if ctx.p == 2 and np.array_equal(P.D, g.C):
        return CpaClassification("Adjoint", Mat(ctx, np.eye(n, dtype=np.uint8)))
    if center(g).dim:
        return CpaClassification("Other", None, ["centre is nonzero, ad is not injective"])
    # ad(phi e_i) = L(e_i): sum_m x_m ad_m = L(e_i)
    adflat = g.ad.reshape(n, n * n)
    rhs = np.stack([P.left(i).reshape(-1) for i in range(n)], axis=1)
    X = solve_codes(ctx, np.ascontiguousarray(adflat.T), rhs)
    if X is None:
        return CpaClassification("Other", None, ["some L(x) is not inner"])
    if not np.array_equal(SymProduct.inner(g, X).D, P.D):
        raise CpaError("recovered phi does not reproduce the product")
    if not is_endomorphism(g, X):
        raise CpaError("phi of an inner structure with trivial centre is not an endomorphism")
    return CpaClassification("InnerNontrivial", Mat(ctx, X))


# ---------------------------------------------------------------------------
# Eigenspace analysis


@dataclass
class EigenDecomposition:
    field: FieldCtx
    embedding: object
    algebra: LieAlgebra
    phi: np.ndarray
    spaces: dict[int, Subspace]
    n: Subspace
    h: Subspace

    @property
    def eigenvalues(self) -> list[int]:
        return sorted(self.spaces)


def eigen_decompose(g: LieAlgebra, phi) -> EigenDecomposition:
    """Generalized eigenspaces of ``phi`` over the splitting field of its characteristic polynomial.

    Checks ``[g_a, g_b]`` lies in ``g_(-a^2)``, ``g_(ab)`` and ``g_(-b^2)`` for
    every pair of eigenvalues, and that brackets vanish unless ``a + b = 0``.
    """
    phi = phi.data if isinstance(phi, Mat) else np.asarray(phi, dtype=np.uint8)
    ctx, n = g.ctx, g.n
    cp = charpoly(Mat(ctx, phi))
    big, emb = splitting_extension(ctx, cp)
    G = change_field(g, emb) if big != ctx else g
    Phi = emb(phi) if big != ctx else phi
    roots = sorted(r.value for r in poly_roots(big, cp.map(emb)))
    spaces = {a: gen_eigenspace(Mat(big, Phi), a) for a in roots}
    total = sum(s.dim for s in spaces.values())
    ssum = Subspace.zero(big, n)
    for s in spaces.values():
        ssum = ssum + s
    if total != n or not ssum.is_full():
        raise CpaError("generalized eigenspaces are not a direct decomposition")
    zero = Subspace.zero(big, n)

    def space(a):
        return spaces.get(a, zero)

    for a, b in itertools.product(roots, repeat=2):
        br = product_space(G, spaces[a], spaces[b])
        if br.dim == 0:
            continue
        target = space(big.neg(big.mul(a, a))) & space(big.mul(a, b)) & space(big.neg(big.mul(b, b)))
        if not br <= target:
            raise CpaError(f"eigenspace bracket containment fails for eigenvalues {big.format(a)}, {big.format(b)}")
        if big.add(a, b) != 0:
            raise CpaError("nonzero bracket between eigenspaces whose eigenvalues do not sum to zero")
    nsp = space(0)
    hsp = zero
    for a, s in spaces.items():
        if a:
            hsp = hsp + s
    for part, nm in ((nsp, "n"), (hsp, "h")):
        if not is_ideal(G, part):
            raise CpaError(f"{nm} is not an ideal")
    return EigenDecomposition(big, emb, G, Phi, spaces, nsp, hsp)


@dataclass
class NHReport:
    componentwise: bool
    n_inf_times_n_zero: bool
    h_second_derived_zero: bool | None
    h_adjoint_on_commutator: bool | None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        vals = [self.componentwise, self.n_inf_times_n_zero, self.h_second_derived_zero,
                self.h_adjoint_on_commutator]
        return all(v is not False for v in vals)


def _products(P: SymProduct, A: Subspace, B: Subspace) -> Subspace:
    ctx, n = P.ctx, P.base.n
    if A.dim == 0 or B.dim == 0:
        return Subspace.zero(ctx, n)
    X = ctx.matmul(A.basis, P.D.reshape(n, n * n)).reshape(A.dim, n, n)
    Y = ctx.matmul(B.basis, X.transpose(1, 0, 2).reshape(n, A.dim * n))
    return Subspace(ctx, n, Y.reshape(-1, n))


def nh_properties(g: LieAlgebra, phi, E: EigenDecomposition) -> NHReport:
    """Structure checks for the ``n + h`` splitting of an inner CPA structure."""
    G = E.algebra
    big = E.field
    P = SymProduct.inner(G, E.phi)
    n_, h_ = E.n, E.h
    comp = (_products(P, n_, h_).dim == 0 and _products(P, n_, n_) <= n_ and _products(P, h_, h_) <= h_)
    ninf = g_inf_lower(G, n_) if n_.dim else n_
    two = _products(P, ninf, n_).dim == 0
    hh = product_space(G, h_, h_)
    third = fourth = None
    if big.p != 2:
        third = product_space(G, hh, hh).dim == 0
    else:
        v = product_space(G, h_, hh)
        if v.dim and h_.dim:
            ok = True
            for x in v.basis:
                for w in h_.basis:
                    if not np.array_equal(P.product(x, w), bracket(G, x, w)):
                        ok = False
                        break
                if not ok:
                    break
            fourth = ok
        else:
            fourth = True
    return NHReport(comp, two, third, fourth)


# ---------------------------------------------------------------------------
# Iterated commutators


@dataclass
class CommutatorReport:
    ok: bool
    signs: dict[int, list[str]]
    checked: dict[int, int]
    counterexample: tuple | None = None


def commutator_formula_check(g: LieAlgebra, phi, depth: int = 4, sample: int = 2000,
                             seed: int = 0) -> CommutatorReport:
    """Compare ``[x1..xn].y`` with ``[[x1..xn], phi^f(n) y]`` on basis tuples.

    Tuples are exhaustive when ``n^(len+1)`` is at most ``sample``, otherwise
    a seeded sample of that size.  Signs seen are recorded per length:
    ``+``, ``-`` (and ``0`` when both sides vanish).
    """
    from .lie import bracket

    ctx, n = g.ctx, g.n
    phi = phi.data if isinstance(phi, Mat) else np.asarray(phi, dtype=np.uint8)
    P = SymProduct.inner(g, phi)
    rng = np.random.default_rng(seed)
    eye = np.eye(n, dtype=np.uint8)
    signs: dict[int, list[str]] = {}
    checked: dict[int, int] = {}
    powers = {}
    for ln in range(1, depth + 1):
        e = f(ln)
        if e not in powers:
            M = np.eye(n, dtype=np.uint8)
            for _ in range(e):
                M = ctx.matmul(phi, M)
            powers[e] = M
        pw = powers[e]
        total = n ** (ln + 1)
        if total <= sample:
            tuples = itertools.product(range(n), repeat=ln + 1)
        else:
            tuples = (tuple(int(v) for v in rng.integers(0, n, ln + 1)) for _ in range(sample))
        seen = set()
        cnt = 0
        for tup in tuples:
            cnt += 1
            *xs, y = tup
            c = eye[xs[-1]]
            for x in reversed(xs[:-1]):
                c = bracket(g, eye[x], c)
            lhs = P.product(c, eye[y])
            rhs = bracket(g, c, pw[:, y])
            if not lhs.any() and not rhs.any():
                seen.add("0")
            elif np.array_equal(lhs, rhs):
                seen.add("+")
            elif np.array_equal(lhs, ctx.vneg(rhs)):
                seen.add("-")
            else:
                return CommutatorReport(False, signs, checked, (ln, tup))
        signs[ln] = sorted(seen)
        checked[ln] = cnt
    return CommutatorReport(True, signs, checked)


__all__ = [
    "CpaError", "f", "SymProduct", "CpaReport", "is_cpa", "linear_system_direct", "cpa_linear_space",
    "CpaResult", "quadratic_system", "cpa_all", "CpaClassification", "is_endomorphism", "classify",
    "EigenDecomposition", "eigen_decompose", "NHReport", "nh_properties", "CommutatorReport",
    "commutator_formula_check", "DEFAULT_LINEAR_LIMIT", "ENLARGED_LINEAR_LIMIT",
]
