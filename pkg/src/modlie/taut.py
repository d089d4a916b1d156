"""Tautness: every homomorphism ``g -> Der(g)`` lands in ``Inn(g)``.

The decision chain uses cheap sufficient conditions first and falls back to
a search for a Lie algebra section of ``Der(g) -> Out(g)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .derive import DerAlgebra, _commutator_tensor, derivations, out_solvability
from .lie import LieAlgebra, is_perfect, is_simple
from .polysolve import DEFAULT_NODE_BUDGET, MultiPoly, PolySystem, solve_all


class TautError(ValueError):
    pass


@dataclass
class SectionResult:
    """Outcome of the section search.

    ``status`` is ``found``, ``none`` (search exhausted) or ``inconclusive``.
    ``A`` has shape (dim Inn, dim Out): column ``j`` holds the Inn part of
    the section's value on the ``j``-th Out basis vector.
    """

    status: str
    A: np.ndarray | None
    nodes: int
    nvars: int
    nequations: int

    @property
    def complete(self) -> bool:
        return self.status != "inconclusive"


def section_system(d: DerAlgebra) -> PolySystem:
    """Homomorphism conditions for ``o_j -> sum_i A[i,j] inn_i + comp_j``.

    Variable ``j*r + i`` is ``A[i, j]`` with ``r = dim Inn``.
    """
    ctx, n = d.ctx, d.base.n
    r, m = d.dim_inn, d.dim_out
    nv = r * m
    names = [f"a_{i + 1}_{j + 1}" for j in range(m) for i in range(r)]
    if m == 0:
        return PolySystem(ctx, 0, [], names)
    inn, comp = d.inn.basis, d.complement.basis
    Cout = d.out.C
    # N[i, i2] = inn coords of [inn_i, inn_i2]
    N = d.inn_coords(_commutator_tensor(ctx, n, inn, inn).reshape(r * r, n * n)).reshape(r, r, r)
    # M[a, i] = inn coords of [comp_a, inn_i]
    M = d.inn_coords(_commutator_tensor(ctx, n, comp, inn).reshape(m * r, n * n)).reshape(m, r, r)
    # X[a, b] = inn part of [comp_a, comp_b]
    cc = _commutator_tensor(ctx, n, comp, comp).reshape(m * m, n * n)
    inn_part = ctx.vsub(cc, ctx.matmul(Cout.reshape(m * m, m), comp))
    X = d.inn_coords(inn_part).reshape(m, m, r)
    neg, add = ctx._neg, ctx._add

    def var(i, j):
        return j * r + i

    eqs = []
    for a in range(m):
        for b in range(a + 1, m):
            for k in range(r):
                t: dict = {}

                def put(mono, c):
                    if c:
                        mono = tuple(sorted(mono))
                        t[mono] = add[t.get(mono, 0)][c]

                for c in range(m):
                    put((var(k, c),), int(Cout[a, b, c]))
                put((), neg[int(X[a, b, k])])
                for i in range(r):
                    put((var(i, b),), neg[int(M[a, i, k])])
                    put((var(i, a),), int(M[b, i, k]))
                for i in range(r):
                    for i2 in range(r):
                        c = int(N[i, i2, k])
                        if c:
                            put((var(i, a), var(i2, b)), neg[c])
                eqs.append(MultiPoly(ctx, nv, t))
    return PolySystem(ctx, nv, [e for e in eqs if not e.is_zero()], names)


def section_matrices(d: DerAlgebra, A: np.ndarray) -> np.ndarray:
    """Flattened derivations ``s(o_j)`` for a section block ``A``."""
    ctx = d.ctx
    if d.dim_out == 0:
        return np.zeros((0, d.base.n ** 2), dtype=np.uint8)
    inn_part = ctx.matmul(np.ascontiguousarray(A.T), d.inn.basis) if d.dim_inn else 0
    return ctx.vadd(inn_part, d.complement.basis)


def verify_section(d: DerAlgebra, A: np.ndarray) -> bool:
    """``pi(s(o_j)) = o_j`` and ``s`` preserves brackets on all basis pairs."""
    ctx, n, m = d.ctx, d.base.n, d.dim_out
    S = section_matrices(d, A)
    if m == 0:
        return True
    if d.der.reduce(S).any():
        return False
    if not np.array_equal(d.out_coords(S), np.eye(m, dtype=np.uint8)):
        return False
    lhs = ctx.matmul(d.out.C.reshape(m * m, m), S)
    rhs = _commutator_tensor(ctx, n, S, S).reshape(m * m, n * n)
    return bool(np.array_equal(lhs, rhs))


def split_section_search(d: DerAlgebra, budget: int = DEFAULT_NODE_BUDGET) -> SectionResult:
    r, m = d.dim_inn, d.dim_out
    if m == 0:
        return SectionResult("found", np.zeros((r, 0), dtype=np.uint8), 0, 0, 0)
    sys = section_system(d)
    sol = solve_all(sys, budget=budget, max_solutions=1)
    if sol.points:
        pt = np.array(sol.points[0], dtype=np.uint8)
        A = pt.reshape(m, r).T.copy()
        if not verify_section(d, A):
            raise TautError("solver returned a section that fails verification")
        return SectionResult("found", A, sol.nodes, sys.nvars, len(sys.equations))
    status = "none" if sol.complete else "inconclusive"
    return SectionResult(status, None, sol.nodes, sys.nvars, len(sys.equations))


@dataclass
class TautVerdict:
    tag: str
    reason: str
    witness: dict | None = None
    complete: bool = True
    nodes: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def taut(self) -> bool:
        return self.tag == "Taut"


def _check_iso(g: LieAlgebra, d: DerAlgebra, theta: np.ndarray) -> bool:
    """``theta`` (dim Out x n, columns are images of e_i) is a Lie isomorphism ``g -> Out``."""
    from .matrix import rank, Mat

    ctx, n = g.ctx, g.n
    theta = np.asarray(theta, dtype=np.uint8)
    if theta.shape != (d.dim_out, n) or rank(Mat(ctx, theta)) != n:
        return False
    cols = np.ascontiguousarray(theta.T)  # row i = theta(e_i)
    lhs = ctx.matmul(g.C.reshape(n * n, n), cols)  # theta([e_i, e_j])
    m = d.dim_out
    # [theta e_i, theta e_j] in Out
    T = ctx.matmul(cols, d.out.C.reshape(m, m * m)).reshape(n, m, m)
    rhs = ctx.matmul(cols, T.transpose(1, 0, 2).reshape(m, n * m)).reshape(n, n, m).transpose(1, 0, 2)
    return bool(np.array_equal(lhs, rhs.reshape(n * n, m)))


def is_taut(g: LieAlgebra, budget: int = DEFAULT_NODE_BUDGET, theta: np.ndarray | None = None,
            assert_out_iso: bool = False, d: DerAlgebra | None = None) -> TautVerdict:
    d = d if d is not None else derivations(g)
    if d.dim_out == 0:
        return TautVerdict("Taut", "OutZero")
    perfect = is_perfect(g)
    out_ser = out_solvability(d)
    if perfect and out_ser.length is not None:
        return TautVerdict("Taut", "OutSolvablePerfect",
                           notes=[f"Out has derived length {out_ser.length}"])
    simple = is_simple(g)
    if simple.tag == "Simple" and d.dim_out < g.n:
        return TautVerdict("Taut", "OutSmallerSimple")
    if simple.tag == "Simple" and d.dim_out == g.n and is_simple(d.out).tag == "Simple":
        res = split_section_search(d, budget)
        if res.status == "none":
            # a map g -> Der leaving Inn composes to an isomorphism g -> Out and yields a section
            return TautVerdict("Taut", "NoSplitSection", nodes=res.nodes,
                               notes=[f"{res.nvars} unknowns, {res.nequations} equations, search complete"])
        if res.status == "inconclusive":
            return TautVerdict("Unknown", "InsufficientCriteria", complete=False, nodes=res.nodes,
                               notes=["section search exhausted its node budget"])
        witness = {"A": res.A, "section": section_matrices(d, res.A)}
        if theta is not None:
            if not _check_iso(g, d, theta):
                raise TautError("supplied theta is not a Lie algebra isomorphism g -> Out(g)")
            S = witness["section"]
            # image of e_i under s o theta
            witness["hom"] = d.ctx.matmul(np.ascontiguousarray(np.asarray(theta, np.uint8).T), S)
            return TautVerdict("NotTaut", "SplitSectionFound", witness, nodes=res.nodes)
        if assert_out_iso:
            return TautVerdict("NotTaut", "SplitSectionFound", witness, nodes=res.nodes,
                               notes=["relies on the asserted isomorphism g = Out(g)"])
        return TautVerdict("Unknown", "SplitSectionFound", witness, nodes=res.nodes,
                           notes=["a section exists; supply an isomorphism g -> Out(g) to conclude"])
    return TautVerdict("Unknown", "InsufficientCriteria")


__all__ = [
    "TautError", "SectionResult", "section_system", "section_matrices", "verify_section",
    "split_section_search", "TautVerdict", "is_taut",
]
