"""Derivations, inner and outer derivation algebras, and the centroid."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import FieldCtx
from .lie import LieAlgebra, SeriesReport, center, is_simple, series, validate
from .matrix import Mat, Subspace, kernel_codes


class DeriveError(RuntimeError):
    """Raised when a computed object fails an internal consistency check."""


def _pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    iu = np.triu_indices(n, 1)
    return iu[0], iu[1]


def derivation_system(g: LieAlgebra) -> np.ndarray:
    """Rows ``(pair, k)`` and columns ``a*n + b`` for ``D[a, b]`` (so ``D e_b = sum_a D[a,b] e_a``).

    Row ``(i<j, k)`` is the ``e_k`` component of ``D[e_i,e_j] - [De_i,e_j] - [e_i,De_j]``.
    """
    ctx, n, C = g.ctx, g.n, g.C
    I, J = _pairs(n)
    P = len(I)
    # T1[p, k, k, m] = C[i, j, m]
    T1 = np.zeros((P, n, n, n), dtype=np.uint8)
    kk = np.arange(n)
    T1[:, kk, kk, :] = C[I, J][:, None, :]
    # T2[p, k, a, i] = C[a, j, k]
    T2 = np.zeros((P, n, n, n), dtype=np.uint8)
    T2[np.arange(P), :, :, I] = C[:, J, :].transpose(1, 2, 0)
    # T3[p, k, a, j] = C[i, a, k]
    T3 = np.zeros((P, n, n, n), dtype=np.uint8)
    T3[np.arange(P), :, :, J] = C[I].transpose(0, 2, 1)
    M = ctx.vsub(ctx.vsub(T1, T2), T3)
    return np.ascontiguousarray(M.reshape(P * n, n * n))


def is_derivation(g: LieAlgebra, D: np.ndarray) -> bool:
    """Leibniz rule on all basis pairs, evaluated directly."""
    ctx, n, C = g.ctx, g.n, g.C
    D = np.asarray(D, dtype=np.uint8)
    # lhs[i, j] = D [e_i, e_j] as a row vector
    lhs = ctx.matmul(C.reshape(n * n, n), np.ascontiguousarray(D.T)).reshape(n, n, n)
    # [D e_i, e_j] = sum_a D[a, i] C[a, j, :]
    r1 = ctx.matmul(np.ascontiguousarray(D.T), C.reshape(n, n * n)).reshape(n, n, n)
    r2 = r1.transpose(1, 0, 2)
    r2 = ctx.vneg(r2)  # [e_i, D e_j] = -[D e_j, e_i]
    return bool(np.array_equal(lhs, ctx.vadd(r1, r2)))


@dataclass
class DerAlgebra:
    """``Der(g)`` with the canonical splitting ``Der = Inn + span(complement)``.

    Matrices are stored flattened row-major (length ``n*n``).  ``inn`` and
    ``der`` are canonical RREF subspaces; ``complement`` rows are reduced
    modulo ``inn`` and in RREF, so their pivots give the out-coordinates.
    """

    base: LieAlgebra
    der: Subspace
    inn: Subspace
    complement: Subspace
    out: LieAlgebra

    @property
    def ctx(self) -> FieldCtx:
        return self.base.ctx

    @property
    def dim_der(self) -> int:
        return self.der.dim

    @property
    def dim_inn(self) -> int:
        return self.inn.dim

    @property
    def dim_out(self) -> int:
        return self.complement.dim

    def matrix(self, flat: np.ndarray) -> np.ndarray:
        n = self.base.n
        return np.asarray(flat, dtype=np.uint8).reshape(n, n)

    @property
    def der_basis(self) -> list[Mat]:
        return [Mat(self.ctx, self.matrix(v)) for v in self.der.basis]

    @property
    def inn_basis(self) -> list[Mat]:
        return [Mat(self.ctx, self.matrix(v)) for v in self.inn.basis]

    @property
    def complement_basis(self) -> list[Mat]:
        return [Mat(self.ctx, self.matrix(v)) for v in self.complement.basis]

    def out_coords(self, flat: np.ndarray) -> np.ndarray:
        """Image in ``Out`` of derivations (rows)."""
        return self.complement.coords(self.inn.reduce(flat))

    def inn_coords(self, flat: np.ndarray) -> np.ndarray:
        """Coordinates of elements of ``Inn`` (rows) in the RREF ``Inn`` basis."""
        return self.inn.coords(flat)

    def proj(self, flat: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """``(inn, out)`` coordinates of derivations in the combined basis."""
        ctx = self.ctx
        flat = np.asarray(flat, dtype=np.uint8)
        oc = self.out_coords(flat)
        rest = ctx.vsub(flat, ctx.matmul(oc.reshape(-1, self.dim_out), self.complement.basis).reshape(flat.shape)) \
            if self.dim_out else flat
        return self.inn_coords(rest), oc

    def commutator(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """``[A, B] = AB - BA`` for flattened matrices (rows, broadcasting pairs)."""
        ctx, n = self.ctx, self.base.n
        a = A.reshape(-1, n, n)
        b = B.reshape(-1, n, n)
        ab = np.stack([ctx.matmul(x, y) for x, y in zip(a, b)])
        ba = np.stack([ctx.matmul(y, x) for x, y in zip(a, b)])
        return ctx.vsub(ab, ba).reshape(-1, n * n)


def _commutator_tensor(ctx: FieldCtx, n: int, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """``[X_s, Y_t]`` for all row pairs of flattened matrices; shape (s, t, n*n)."""
    a, b = X.shape[0], Y.shape[0]
    Xm = X.reshape(a, n, n)
    Ym = Y.reshape(b, n, n)
    # XY[s, t] = X_s @ Y_t
    XY = ctx.matmul(Xm.reshape(a * n, n), Ym.transpose(1, 0, 2).reshape(n, b * n))
    XY = XY.reshape(a, n, b, n).transpose(0, 2, 1, 3)
    YX = ctx.matmul(Ym.reshape(b * n, n), Xm.transpose(1, 0, 2).reshape(n, a * n))
    YX = YX.reshape(b, n, a, n).transpose(2, 0, 1, 3)
    return ctx.vsub(XY, YX).reshape(a, b, n * n)


def derivations(g: LieAlgebra, check: bool = True) -> DerAlgebra:
    ctx, n = g.ctx, g.n
    if n == 0:
        z = Subspace.zero(ctx, 0)
        return DerAlgebra(g, z, z, z, LieAlgebra.abelian(ctx, 0))
    if n == 1:
        der = Subspace.full(ctx, 1)
    else:
        der = Subspace(ctx, n * n, kernel_codes(ctx, derivation_system(g)), reduced=True)
    inn = Subspace(ctx, n * n, g.ad.reshape(n, n * n))
    comp = Subspace(ctx, n * n, inn.reduce(der.basis)) if der.dim else Subspace.zero(ctx, n * n)
    m = comp.dim
    br = _commutator_tensor(ctx, n, comp.basis, comp.basis).reshape(m * m, n * n)
    Cout = comp.coords(inn.reduce(br)).reshape(m, m, m) if m else np.zeros((0, 0, 0), np.uint8)
    out = LieAlgebra(ctx, Cout, [f"o{i + 1}" for i in range(m)])
    d = DerAlgebra(g, der, inn, comp, out)
    if check:
        if m and inn.reduce(br).shape and (comp.reduce(inn.reduce(br))).any():
            raise DeriveError("outer bracket left the complement")
        if not (inn <= der):
            raise DeriveError("inner derivations not contained in Der")
        if inn.dim != n - center(g).dim:
            raise DeriveError("dim Inn differs from n - dim Z")
        rep = validate(out)
        if not rep:
            raise DeriveError(f"Out failed validation: {rep.message}")
    return d


def der_lie(d: DerAlgebra) -> LieAlgebra:
    """``Der(g)`` as a Lie algebra on its RREF basis."""
    ctx, n = d.ctx, d.base.n
    k = d.der.dim
    br = _commutator_tensor(ctx, n, d.der.basis, d.der.basis).reshape(k * k, n * n)
    return LieAlgebra(ctx, d.der.coords(br).reshape(k, k, k), [f"D{i + 1}" for i in range(k)])


def check_leibniz(d: DerAlgebra) -> bool:
    return all(is_derivation(d.base, d.matrix(v)) for v in d.der.basis)


def check_inn_ideal(d: DerAlgebra) -> bool:
    """``[D, ad e_i] = ad(D e_i)`` for every Der basis element and every ``i``."""
    g, ctx, n = d.base, d.ctx, d.base.n
    ad = g.ad.reshape(n, n * n)
    comm = _commutator_tensor(ctx, n, d.der.basis, ad)  # (k, n, n*n)
    for s, v in enumerate(d.der.basis):
        D = d.matrix(v)
        # D e_i is column i of D; ad of it is sum_a D[a, i] ad_a
        rhs = ctx.matmul(np.ascontiguousarray(D.T), ad)
        if not np.array_equal(comm[s], rhs):
            return False
    return True


def out_solvability(d: DerAlgebra) -> SeriesReport:
    return series(d.out, "derived")


@dataclass
class HeisenbergProfile:
    dim: int
    nilpotency_class: int | None
    center_dim: int | None

    def as_tuple(self):
        return (self.dim, self.nilpotency_class, self.center_dim)

    @property
    def is_heisenberg(self) -> bool:
        return self.as_tuple() == (3, 2, 1)


def out_heisenberg_profile(d: DerAlgebra) -> HeisenbergProfile:
    """Dimension, nilpotency class and centre dimension of ``Out^(1)``."""
    from .lie import subalgebra

    out = d.out
    ser = series(out, "derived")
    if len(ser.terms) < 2:
        return HeisenbergProfile(0, None, None)
    first = ser.terms[1]
    if first.dim == 0:
        return HeisenbergProfile(0, None, None)
    h = subalgebra(out, first)
    lcs = series(h, "lower-central")
    return HeisenbergProfile(h.n, lcs.length, center(h).dim)


@dataclass
class Centroid:
    base: LieAlgebra
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> list[Mat]:
        n = self.base.n
        return [Mat(self.base.ctx, v.reshape(n, n)) for v in self.space.basis]

    def contains_identity(self) -> bool:
        n = self.base.n
        return self.space.contains(np.eye(n, dtype=np.uint8).reshape(-1))


def centroid(g: LieAlgebra) -> Centroid:
    """Maps commuting with every ``ad e_j``."""
    ctx, n = g.ctx, g.n
    eye = np.eye(n, dtype=np.uint8)
    blocks = []
    for A in g.ad:
        # row-major vec: vec(phi A) = (I kron A^T) vec(phi), vec(A phi) = (A kron I) vec(phi)
        blocks.append(ctx.vsub(np.kron(eye, A.T), np.kron(A, eye)))
    M = np.ascontiguousarray(np.vstack(blocks)) if blocks else np.zeros((0, n * n), np.uint8)
    return Centroid(g, Subspace(ctx, n * n, kernel_codes(ctx, M), reduced=True))


def is_centroid_element(g: LieAlgebra, phi: np.ndarray) -> bool:
    """``phi[x, y] = [phi x, y]`` on all basis pairs."""
    ctx, n, C = g.ctx, g.n, g.C
    lhs = ctx.matmul(C.reshape(n * n, n), np.ascontiguousarray(phi.T)).reshape(n, n, n)
    rhs = ctx.matmul(np.ascontiguousarray(phi.T), C.reshape(n, n * n)).reshape(n, n, n)
    return bool(np.array_equal(lhs, rhs))


@dataclass
class CentralSimplicity:
    central_simple: bool
    simple: str
    centroid_dim: int


def is_central_simple(g: LieAlgebra, **simple_kw) -> CentralSimplicity:
    verdict = is_simple(g, **simple_kw)
    cd = centroid(g).dim
    return CentralSimplicity(verdict.tag == "Simple" and cd == 1, verdict.tag, cd)


__all__ = [
    "DeriveError", "DerAlgebra", "derivation_system", "derivations", "is_derivation", "der_lie",
    "check_leibniz", "check_inn_ideal", "out_solvability", "HeisenbergProfile",
    "out_heisenberg_profile", "Centroid", "centroid", "is_centroid_element",
    "CentralSimplicity", "is_central_simple",
]
