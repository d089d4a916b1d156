"""Lie algebras given by structure constants over a finite field.

A :class:`LieAlgebra` stores the full alternating tensor ``C[i, j, k]``, the
coefficient of ``e_k`` in ``[e_i, e_j]``.  Coordinates are 0-based here;
the ``.lie`` file format shifts them to 1-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .field import FieldCtx, extension, Embedding
from .matrix import Mat, Subspace, as_vector, kernel_codes

DEFAULT_SIMPLICITY_BUDGET = 2**21
_SAMPLE_SIZE = 512
_SAMPLE_SEED = 20190101


class LieError(ValueError):
    pass


class LieAlgebra:
    """Finite-dimensional Lie algebra with a fixed basis ``e_0 .. e_{n-1}``.

    ``certificate`` is an optional free-form claim attached by constructors
    (for example ``"known simple"``); nothing in the library trusts it
    silently, it is only reported next to computed verdicts.
    """

    __slots__ = ("ctx", "n", "C", "labels", "certificate", "_ad")

    def __init__(self, ctx: FieldCtx, C: np.ndarray, labels: Sequence[str] | None = None,
                 certificate: str | None = None):
        C = np.ascontiguousarray(C, dtype=np.uint8)
        n = C.shape[0]
        if C.shape != (n, n, n):
            raise LieError(f"structure tensor must be n x n x n, got {C.shape}")
        C.setflags(write=False)
        self.ctx = ctx
        self.n = n
        self.C = C
        self.labels = list(labels) if labels is not None else [f"e{i + 1}" for i in range(n)]
        self.certificate = certificate
        self._ad = None

    @classmethod
    def from_brackets(cls, ctx: FieldCtx, n: int, sc: Mapping[tuple[int, int], Sequence],
                      labels=None, certificate=None) -> "LieAlgebra":
        """Build from ``{(i, j): coords of [e_i, e_j]}`` with ``i < j``."""
        C = np.zeros((n, n, n), dtype=np.uint8)
        for (i, j), vec in sc.items():
            if not 0 <= i < j < n:
                raise LieError(f"bracket key ({i}, {j}) violates i < j")
            v = as_vector(ctx, vec)
            C[i, j] = v
            C[j, i] = ctx.vneg(v)
        return cls(ctx, C, labels, certificate)

    @classmethod
    def abelian(cls, ctx: FieldCtx, n: int) -> "LieAlgebra":
        return cls(ctx, np.zeros((n, n, n), dtype=np.uint8))

    @property
    def sc(self) -> dict[tuple[int, int], np.ndarray]:
        """Sparse view: nonzero brackets ``[e_i, e_j]`` for ``i < j``."""
        return {(i, j): self.C[i, j].copy() for i, j in itertools.combinations(range(self.n), 2)
                if self.C[i, j].any()}

    @property
    def ad(self) -> np.ndarray:
        """``ad[i]`` is the matrix of ``ad(e_i)`` acting on column vectors."""
        if self._ad is None:
            ad = np.ascontiguousarray(self.C.transpose(0, 2, 1))
            ad.setflags(write=False)
            self._ad = ad
        return self._ad

    def ad_of(self, x) -> np.ndarray:
        x = as_vector(self.ctx, x)
        n = self.n
        return self.ctx.matmul(x.reshape(1, n), self.ad.reshape(n, n * n)).reshape(n, n)

    def __eq__(self, other):
        return (isinstance(other, LieAlgebra) and self.ctx == other.ctx
                and bool(np.array_equal(self.C, other.C)))

    def __hash__(self):
        return hash((self.ctx, self.C.tobytes()))

    def __repr__(self):
        return f"LieAlgebra(dim {self.n} over F_{self.ctx.q})"

    def basis_vector(self, i: int) -> np.ndarray:
        v = np.zeros(self.n, dtype=np.uint8)
        v[i] = 1
        return v

    def full(self) -> Subspace:
        return Subspace.full(self.ctx, self.n)

    def zero(self) -> Subspace:
        return Subspace.zero(self.ctx, self.n)

    def is_abelian(self) -> bool:
        return not self.C.any()


# ---------------------------------------------------------------------------
# Validation


@dataclass
class ValidationReport:
    ok: bool
    axiom: str | None = None
    triple: tuple[int, ...] | None = None
    message: str = ""

    def __bool__(self):
        return self.ok


def validate(g: LieAlgebra) -> ValidationReport:
    """Check alternating storage and the Jacobi identity on basis triples."""
    ctx, n, C = g.ctx, g.n, g.C
    for i in range(n):
        if C[i, i].any():
            return ValidationReport(False, "alternating", (i,), f"[e{i + 1},e{i + 1}] != 0")
    anti = ctx.vadd(C, C.transpose(1, 0, 2))
    if anti.any():
        i, j = (int(v) for v in np.argwhere(anti.any(axis=2))[0])
        return ValidationReport(False, "antisymmetry", (i, j), f"[e{i + 1},e{j + 1}] != -[e{j + 1},e{i + 1}]")
    if n < 3:
        return ValidationReport(True)
    J = jacobiator(g)
    bad = np.argwhere(J.any(axis=3))
    bad = [tuple(int(v) for v in t) for t in bad if t[0] < t[1] < t[2]]
    if bad:
        i, j, k = min(bad)
        return ValidationReport(False, "jacobi", (i, j, k),
                                f"Jacobi fails on (e{i + 1}, e{j + 1}, e{k + 1})")
    return ValidationReport(True)


def jacobiator(g: LieAlgebra) -> np.ndarray:
    """``J[i,j,k] = [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]``."""
    ctx, n, C = g.ctx, g.n, g.C
    # T[i, j, k] = [e_i, [e_j, e_k]] = sum_m C[j,k,m] C[i,m,:]
    inner = C.reshape(n * n, n)  # (jk, m)
    outer = C.transpose(1, 0, 2).reshape(n, n * n)  # (m, i r)
    T = ctx.matmul(inner, outer).reshape(n, n, n, n).transpose(2, 0, 1, 3)  # (i, j, k, r)
    return ctx.vadd(ctx.vadd(T, T.transpose(1, 2, 0, 3)), T.transpose(2, 0, 1, 3))


# ---------------------------------------------------------------------------
# Brackets and subspaces


def bracket(g: LieAlgebra, x, y) -> np.ndarray:
    ctx, n = g.ctx, g.n
    x = as_vector(ctx, x)
    y = as_vector(ctx, y)
    if x.shape != (n,) or y.shape != (n,):
        raise LieError(f"vectors must have length {n}")
    outer = ctx.vmul(x[:, None], y[None, :]).reshape(1, n * n)
    return ctx.matmul(outer, g.C.reshape(n * n, n))[0]


def brackets_of(g: LieAlgebra, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """All brackets ``[a_s, b_t]`` of rows of ``A`` with rows of ``B``; shape (a*b, n)."""
    ctx, n = g.ctx, g.n
    a, b = A.shape[0], B.shape[0]
    if a == 0 or b == 0:
        return np.zeros((0, n), dtype=np.uint8)
    T = ctx.matmul(A, g.C.reshape(n, n * n)).reshape(a, n, n)  # [s, j, k] = [a_s, e_j]_k
    out = ctx.matmul(B, T.transpose(1, 0, 2).reshape(n, a * n))  # (b, a*n)
    return out.reshape(b * a, n)


def product_space(g: LieAlgebra, A: Subspace, B: Subspace) -> Subspace:
    """``[A, B]`` as a subspace in canonical form."""
    return Subspace(g.ctx, g.n, brackets_of(g, A.basis, B.basis))


def is_ideal(g: LieAlgebra, I: Subspace) -> bool:
    return product_space(g, g.full(), I) <= I


def is_subalgebra(g: LieAlgebra, S: Subspace) -> bool:
    return product_space(g, S, S) <= S


@dataclass
class SeriesReport:
    """Derived or lower central series, stopped at the first repeated term.

    ``terms[0]`` is the whole algebra and ``terms[-1]`` the limit term.
    ``length`` is the derived length (or nilpotency class) when the limit
    is zero and ``None`` otherwise.
    """

    kind: str
    terms: list[Subspace]
    stabilized: bool
    length: int | None

    @property
    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]

    @property
    def limit(self) -> Subspace:
        return self.terms[-1]


def series(g: LieAlgebra, kind: str = "derived", start: Subspace | None = None) -> SeriesReport:
    """Derived (``g^(i+1) = [g^(i), g^(i)]``) or lower central (``g^(i+1) = [g, g^i]``) series.

    ``start`` restricts to the series of a subalgebra/ideal of ``g``.
    """
    if kind not in ("derived", "lower-central"):
        raise LieError(f"unknown series kind {kind!r}")
    top = start if start is not None else g.full()
    terms = [top]
    while True:
        cur = terms[-1]
        nxt = product_space(g, cur, cur) if kind == "derived" else product_space(g, top, cur)
        if nxt == cur:
            break
        terms.append(nxt)
    limit = terms[-1]
    length = len(terms) - 1 if limit.dim == 0 else None
    return SeriesReport(kind, terms, limit.dim != 0, length)


def derived_length(g: LieAlgebra) -> int | None:
    return series(g, "derived").length


def g_inf_derived(g: LieAlgebra) -> Subspace:
    return series(g, "derived").limit


def g_inf_lower(g: LieAlgebra, start: Subspace | None = None) -> Subspace:
    return series(g, "lower-central", start).limit


def is_perfect(g: LieAlgebra) -> bool:
    return product_space(g, g.full(), g.full()).is_full()


def is_solvable(g: LieAlgebra) -> bool:
    return g_inf_derived(g).dim == 0


def center(g: LieAlgebra) -> Subspace:
    """``{x : [x, e_j] = 0 for all j}``."""
    n = g.n
    M = np.ascontiguousarray(g.C.transpose(1, 2, 0).reshape(n * n, n))
    return Subspace(g.ctx, n, kernel_codes(g.ctx, M), reduced=True)


def centralizer(g: LieAlgebra, S: Subspace) -> Subspace:
    """``{x : [x, s] = 0 for all s in S}``."""
    n = g.n
    if S.dim == 0:
        return g.full()
    # [x, s]_k = sum_i x_i (s @ C[i, :, :])_k
    T = g.ctx.matmul(S.basis, g.C.transpose(1, 0, 2).reshape(n, n * n)).reshape(S.dim, n, n)
    M = np.ascontiguousarray(T.transpose(0, 2, 1).reshape(S.dim * n, n))
    return Subspace(g.ctx, n, kernel_codes(g.ctx, M), reduced=True)


def upper_central_series(g: LieAlgebra) -> list[Subspace]:
    """``Z_0 = 0``, ``Z_{i+1} = {x : [x, g] in Z_i}``; ends at ``Z_inf``."""
    terms = [g.zero()]
    while True:
        cur = terms[-1]
        if cur.dim == 0:
            nxt = center(g)
        else:
            q, proj = quotient(g, cur)
            zq = center(q)
            # preimage of the centre of g/Z_i
            lifted = np.zeros((zq.dim, g.n), dtype=np.uint8)
            comp = cur.complement_coords()
            lifted[:, comp] = zq.basis
            nxt = cur + Subspace(g.ctx, g.n, lifted)
        if nxt == cur:
            return terms
        terms.append(nxt)


def ideal_closure(g: LieAlgebra, S: Subspace) -> Subspace:
    """Smallest ideal containing ``S``; at most ``n`` rounds of ``S <- S + [g, S]``."""
    cur = S
    ad = g.ad
    n = g.n
    for _ in range(n + 1):
        if cur.dim == 0 or cur.dim == n:
            return cur
        # images of basis vectors under every ad(e_i): rows s @ ad_i^T
        imgs = g.ctx.matmul(cur.basis, ad.transpose(2, 0, 1).reshape(n, n * n)).reshape(cur.dim * n, n)
        nxt = Subspace(g.ctx, n, np.vstack([cur.basis, imgs]))
        if nxt.dim == cur.dim:
            return cur
        cur = nxt
    return cur


def spin(ctx: FieldCtx, mats: np.ndarray, vecs: np.ndarray) -> Subspace:
    """Smallest subspace containing ``vecs`` (rows) invariant under ``v -> M v``."""
    k, n, _ = mats.shape
    cur = Subspace(ctx, n, vecs)
    stacked = np.ascontiguousarray(mats.transpose(2, 0, 1).reshape(n, k * n))
    while 0 < cur.dim < n:
        imgs = ctx.matmul(cur.basis, stacked).reshape(cur.dim * k, n)
        nxt = Subspace(ctx, n, np.vstack([cur.basis, imgs]))
        if nxt.dim == cur.dim:
            break
        cur = nxt
    return cur


# ---------------------------------------------------------------------------
# Constructions


def subalgebra(g: LieAlgebra, S: Subspace, labels=None) -> LieAlgebra:
    """Lie algebra on the RREF basis of a subalgebra ``S``."""
    if not is_subalgebra(g, S):
        raise LieError("subspace is not closed under the bracket")
    d = S.dim
    br = brackets_of(g, S.basis, S.basis).reshape(d, d, g.n)  # [t, s] -> [b_s, b_t]
    C = S.coords(br.transpose(1, 0, 2))
    return LieAlgebra(g.ctx, C, labels)


def quotient(g: LieAlgebra, I: Subspace) -> tuple[LieAlgebra, Mat]:
    """``g / I`` on the complement coordinates of ``I``'s RREF basis, plus the projection."""
    if not is_ideal(g, I):
        raise LieError("quotient by a subspace that is not an ideal")
    ctx, n = g.ctx, g.n
    comp = I.complement_coords()
    m = len(comp)
    red = I.reduce(np.eye(n, dtype=np.uint8))  # row j: e_j mod I
    proj = Mat(ctx, np.ascontiguousarray(red[:, comp].T))  # m x n
    sub = g.C[np.ix_(comp, comp)].reshape(m * m, n)
    C = I.reduce(sub)[:, comp].reshape(m, m, m)
    labels = [g.labels[c] for c in comp]
    return LieAlgebra(ctx, C, labels), proj


def direct_sum(g: LieAlgebra, h: LieAlgebra) -> LieAlgebra:
    if g.ctx != h.ctx:
        raise LieError("direct sum of algebras over different fields")
    n, m = g.n, h.n
    C = np.zeros((n + m, n + m, n + m), dtype=np.uint8)
    C[:n, :n, :n] = g.C
    C[n:, n:, n:] = h.C
    labels = [f"{l}" for l in g.labels] + [f"{l}'" for l in h.labels]
    return LieAlgebra(g.ctx, C, labels)


def change_field(g: LieAlgebra, emb: Embedding) -> LieAlgebra:
    """Same structure constants pushed through a field embedding."""
    if emb.src != g.ctx:
        raise LieError("embedding source does not match the algebra's field")
    return LieAlgebra(emb.dst, emb(g.C), g.labels, g.certificate)


def extend_scalars(g: LieAlgebra, k: int) -> LieAlgebra:
    if k < 1:
        raise LieError("extension degree must be >= 1")
    if k == 1:
        return g
    _, emb = extension(g.ctx, k)
    out = change_field(g, emb)
    out.certificate = None
    return out


def restrict_scalars(g: LieAlgebra) -> LieAlgebra:
    """View an algebra over F_{p^k} as one over F_p with basis ``t^a e_i``.

    Basis order is ``e_1, t e_1, ..., t^{k-1} e_1, e_2, ...``.
    """
    from .field import ff_make

    ctx = g.ctx
    k = ctx.k
    if k == 1:
        return g
    fp = ff_make(ctx.p)
    n = g.n
    tpow = [ctx.pow(ctx.from_coeffs([0, 1]), a) for a in range(2 * k - 1)]
    N = n * k
    C = np.zeros((N, N, N), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            row = g.C[i, j]
            if not row.any():
                continue
            for a in range(k):
                for b in range(k):
                    for l in np.flatnonzero(row):
                        val = ctx.mul(tpow[a + b], int(row[l]))
                        C[i * k + a, j * k + b, l * k:(l + 1) * k] = ctx.coeffs(val)
    labels = [f"{g.labels[i]}" if a == 0 else f"t^{a}{g.labels[i]}" if a > 1 else f"t{g.labels[i]}"
              for i in range(n) for a in range(k)]
    return LieAlgebra(fp, C.astype(np.uint8), labels)


# ---------------------------------------------------------------------------
# Simplicity


@dataclass
class SimplicityVerdict:
    """``tag`` is ``Simple``, ``NotSimple`` or ``Unknown``.

    ``method`` records how the verdict was reached: ``exhaustive`` (every
    nonzero vector's ideal closure computed), ``meataxe`` (Norton's
    irreducibility criterion for the adjoint module), ``abelian`` or
    ``sample``.  ``vectors_covered`` counts nonzero vectors whose closures
    are known (scalar multiples share one closure).
    """

    tag: str
    method: str
    witness: Subspace | None = None
    closures: int = 0
    vectors_covered: int = 0
    certificate: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def simple(self) -> bool:
        return self.tag == "Simple"


def _projective_points(q: int, n: int):
    """Nonzero vectors with leading coordinate 1, in canonical order."""
    for lead in range(n):
        for tail in itertools.product(range(q), repeat=n - lead - 1):
            v = np.zeros(n, dtype=np.uint8)
            v[lead] = 1
            v[lead + 1:] = tail
            yield v


def is_simple(g: LieAlgebra, budget: int = DEFAULT_SIMPLICITY_BUDGET, meataxe: bool = True) -> SimplicityVerdict:
    """Decide simplicity of a non-abelian algebra.

    With ``q^n <= budget`` every nonzero vector is tried.  Otherwise the
    adjoint module is tested with Norton's irreducibility criterion, and if
    that is inconclusive the basis vectors plus a fixed pseudo-random sample
    are tried, returning ``Unknown`` when none gives a proper ideal.
    """
    ctx, n = g.ctx, g.n
    cert = g.certificate
    if n == 0:
        return SimplicityVerdict("NotSimple", "abelian", None, certificate=cert, notes=["zero algebra"])
    if g.is_abelian():
        wit = Subspace.span(ctx, n, [g.basis_vector(0)]) if n > 1 else None
        return SimplicityVerdict("NotSimple", "abelian", wit, certificate=cert)
    z = center(g)
    if z.dim:
        return SimplicityVerdict("NotSimple", "center", z, certificate=cert)
    d = product_space(g, g.full(), g.full())
    if not d.is_full():
        return SimplicityVerdict("NotSimple", "derived", d, certificate=cert)
    total = ctx.q**n - 1
    if ctx.q**n <= budget:
        count = 0
        for v in _projective_points(ctx.q, n):
            count += 1
            cl = ideal_closure(g, Subspace(ctx, n, v.reshape(1, n)))
            if not cl.is_full():
                return SimplicityVerdict("NotSimple", "exhaustive", cl, count, count * (ctx.q - 1), cert)
        return SimplicityVerdict("Simple", "exhaustive", None, count, total, cert)
    notes = []
    if meataxe:
        res = norton_test(ctx, g.ad)
        if res is not None:
            tag, wit = res
            if tag == "Simple":
                return SimplicityVerdict("Simple", "meataxe", None, certificate=cert)
            return SimplicityVerdict("NotSimple", "meataxe", wit, certificate=cert)
        notes.append("irreducibility test inconclusive")
    rng = np.random.default_rng(_SAMPLE_SEED)
    tried = 0
    vecs = [g.basis_vector(i) for i in range(n)]
    vecs += [rng.integers(0, ctx.q, n).astype(np.uint8) for _ in range(_SAMPLE_SIZE)]
    for v in vecs:
        if not v.any():
            continue
        tried += 1
        cl = ideal_closure(g, Subspace(ctx, n, v.reshape(1, n)))
        if not cl.is_full():
            return SimplicityVerdict("NotSimple", "sample", cl, tried, certificate=cert, notes=notes)
    notes.append(f"{tried} sampled closures were all full; exhaustion needs {total} vectors")
    return SimplicityVerdict("Unknown", "sample", None, tried, certificate=cert, notes=notes)


def norton_test(ctx: FieldCtx, gens: np.ndarray, attempts: int = 40, max_factor_degree: int = 3,
                seed: int = _SAMPLE_SEED):
    """Norton's irreducibility test for the module generated by ``gens``.

    Returns ``("Simple", None)`` when irreducibility is certified,
    ``("NotSimple", submodule)`` when a proper invariant subspace is found,
    or ``None`` when no attempt was decisive.  Submodules are invariant
    subspaces of column vectors.
    """
    from .field import BudgetExceeded, poly_factor
    from .matrix import charpoly

    k, n, _ = gens.shape
    rng = np.random.default_rng(seed)
    algebra = [gens[i] for i in range(k)]
    gens_t = np.ascontiguousarray(gens.transpose(0, 2, 1))
    for _ in range(attempts):
        # grow a pool of algebra elements by random products, then combine
        i, j = rng.integers(0, len(algebra), 2)
        algebra.append(ctx.vadd(algebra[int(i)], ctx.matmul(algebra[int(i)], algebra[int(j)])))
        coeffs = rng.integers(0, ctx.q, len(algebra))
        A = np.zeros((n, n), dtype=np.uint8)
        for c, M in zip(coeffs, algebra):
            if c:
                A = ctx.vadd(A, ctx.vmul(M, int(c)))
        f = charpoly(Mat(ctx, A))
        try:
            factors = poly_factor(ctx, f, max_degree=max_factor_degree)
        except BudgetExceeded:
            continue
        for h, _ in factors:
            if h.degree > max_factor_degree:
                continue
            hA = h.eval_matrix(A)
            N = kernel_codes(ctx, hA)
            if N.shape[0] == 0:
                continue
            sub = spin(ctx, gens, N[:1])
            if not sub.is_full():
                return "NotSimple", sub
            Nt = kernel_codes(ctx, np.ascontiguousarray(hA.T))
            dual = spin(ctx, gens_t, Nt[:1])
            if not dual.is_full():
                # annihilator of a proper dual submodule is a proper submodule
                ann = kernel_codes(ctx, dual.basis)
                return "NotSimple", Subspace(ctx, n, ann, reduced=True)
            if N.shape[0] == h.degree:
                return "Simple", None
    return None
