"""Polynomial systems over F_q and an exhaustive branch-and-propagate solver.

Monomials are sorted tuples of variable indices (``(0, 0, 3)`` is
``x0^2 x3``; ``()`` is the constant monomial).  Coefficients are field codes.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from . import _backend
from .field import FieldCtx, FieldElem
from .matrix import rref_codes

DEFAULT_NODE_BUDGET = 10**7

Monomial = tuple


class PolyError(ValueError):
    pass


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b))


def _exponents(m: Monomial, nvars: int) -> tuple[int, ...]:
    e = [0] * nvars
    for v in m:
        e[v] += 1
    return tuple(e)


def _grlex_key(m: Monomial, nvars: int):
    # higher degree first, then larger exponent vectors first
    return (-len(m), tuple(-x for x in _exponents(m, nvars)))


class MultiPoly:
    """Sparse polynomial; ``terms`` maps monomials to nonzero codes."""

    __slots__ = ("ctx", "nvars", "terms")

    def __init__(self, ctx: FieldCtx, nvars: int, terms: Mapping[Monomial, int] | None = None):
        self.ctx = ctx
        self.nvars = nvars
        clean = {}
        if terms:
            for m, c in terms.items():
                c = int(c.value if isinstance(c, FieldElem) else c)
                if c:
                    m = tuple(sorted(m))
                    if m and (m[0] < 0 or m[-1] >= nvars):
                        raise PolyError(f"variable index out of range in {m}")
                    clean[m] = ctx.add(clean.get(m, 0), c)
                    if not clean[m]:
                        del clean[m]
        self.terms = clean

    @classmethod
    def constant(cls, ctx: FieldCtx, nvars: int, c: int) -> "MultiPoly":
        return cls(ctx, nvars, {(): c})

    @classmethod
    def var(cls, ctx: FieldCtx, nvars: int, i: int, c: int = 1) -> "MultiPoly":
        return cls(ctx, nvars, {(i,): c})

    # -- queries ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def variables(self) -> set[int]:
        return {v for m in self.terms for v in m}

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda mc: _grlex_key(mc[0], self.nvars))

    def exponent_terms(self) -> dict[tuple[int, ...], int]:
        return {_exponents(m, self.nvars): c for m, c in self.terms.items()}

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.ctx == other.ctx
                and self.nvars == other.nvars and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ctx, self.nvars, tuple(self.sorted_terms())))

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.ctx != self.ctx or other.nvars != self.nvars:
                raise PolyError("polynomials over different rings")
            return other
        if isinstance(other, FieldElem):
            return MultiPoly.constant(self.ctx, self.nvars, other.value)
        return MultiPoly.constant(self.ctx, self.nvars, self.ctx.from_int(int(other)))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        add = self.ctx.add
        for m, c in other.terms.items():
            v = add(out.get(m, 0), c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MultiPoly(self.ctx, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ctx.neg
        return MultiPoly(self.ctx, self.nvars, {m: neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        ctx = self.ctx
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = ctx.add(out.get(m, 0), ctx.mul(c1, c2))
        return MultiPoly(ctx, self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = MultiPoly.constant(self.ctx, self.nvars, 1)
        for _ in range(e):
            out = out * self
        return out

    def scale(self, c: int) -> "MultiPoly":
        return MultiPoly(self.ctx, self.nvars, _scale(self.ctx, self.terms, c))

    def eval(self, point: Sequence[int]) -> int:
        return _eval(self.ctx, self.terms, point)

    def __call__(self, point: Sequence[int]) -> int:
        return self.eval(point)

    # -- text ------------------------------------------------------------

    def format(self, names: Sequence[str] | None = None) -> str:
        ctx = self.ctx
        if not self.terms:
            return "0"
        names = names or [f"x{i}" for i in range(self.nvars)]
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for v, e in sorted(_count(m).items()):
                factors.append(names[v] if e == 1 else f"{names[v]}^{e}")
            lit = ctx.format(c)
            if ctx.k > 1 and not re.fullmatch(r"\d+|t", lit):
                lit = f"({lit})"
            if not factors:
                parts.append(lit)
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([lit] + factors))
        return " + ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"MultiPoly({self.format()})"

    @classmethod
    def parse(cls, ctx: FieldCtx, nvars: int, text: str, names: Sequence[str] | None = None) -> "MultiPoly":
        """Parse ``2*a_3_4*a_1_2 + a_0_0 + 1`` style text.

        Without ``names`` variables are written ``x<i>``.  Coefficients are
        field literals; extension-field literals must be parenthesized unless
        they are a bare ``t``.
        """
        lookup = {nm: i for i, nm in enumerate(names)} if names else None
        s = text.replace(" ", "")
        if not s:
            raise PolyError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        # split on top-level + / -
        terms, depth, start = [], 0, 0
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch in "+-" and depth == 0 and i > start:
                if s[i - 1] != "^":
                    terms.append(s[start:i])
                    start = i
        terms.append(s[start:])
        out = cls(ctx, nvars)
        for term in terms:
            sign, body = term[0], term[1:]
            if not body:
                raise PolyError(f"dangling sign in {text!r}")
            coeff, mono = 1, []
            for fac in _split_factors(body):
                m = re.fullmatch(r"(.+?)\^(\d+)", fac)
                base, exp = (m.group(1), int(m.group(2))) if m and not fac.startswith("(") else (fac, 1)
                idx = _var_index(base, lookup, nvars)
                if idx is None:
                    val = ctx.parse(base)
                    coeff = ctx.mul(coeff, ctx.pow(val, exp))
                else:
                    mono.extend([idx] * exp)
            if sign == "-":
                coeff = ctx.neg(coeff)
            out = out + cls(ctx, nvars, {tuple(mono): coeff})
        return out


def _split_factors(body: str) -> list[str]:
    out, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "*" and depth == 0:
            out.append(body[start:i])
            start = i + 1
    out.append(body[start:])
    if any(not f for f in out):
        raise PolyError(f"empty factor in {body!r}")
    return out


def _var_index(tok: str, lookup, nvars: int) -> int | None:
    if lookup is not None:
        if tok in lookup:
            return lookup[tok]
        return None
    m = re.fullmatch(r"x(\d+)", tok)
    if m:
        i = int(m.group(1))
        if i >= nvars:
            raise PolyError(f"variable {tok} out of range")
        return i
    return None


def _count(m: Monomial) -> dict[int, int]:
    out: dict[int, int] = {}
    for v in m:
        out[v] = out.get(v, 0) + 1
    return out


def _scale(ctx: FieldCtx, terms: Mapping, c: int) -> dict:
    if not c:
        return {}
    mul = ctx._mul[c]
    return {m: mul[v] for m, v in terms.items()}


def _eval(ctx: FieldCtx, terms: Mapping, point: Sequence[int]) -> int:
    add, mul = ctx._add, ctx._mul
    acc = 0
    for m, c in terms.items():
        v = c
        for x in m:
            v = mul[v][point[x]]
            if not v:
                break
        acc = add[acc][v]
    return acc


def substitute(p: MultiPoly, var: int, value) -> MultiPoly:
    """Replace ``var`` by a field value or by a polynomial of degree <= 1."""
    if not 0 <= var < p.nvars:
        raise PolyError(f"variable {var} out of range")
    if isinstance(value, MultiPoly):
        if value.degree > 1:
            raise PolyError("substitution expression must be linear")
        expr = value.terms
    else:
        # integers are read as elements of the prime field; use FieldElem for others
        c = value.value if isinstance(value, FieldElem) else p.ctx.from_int(int(value))
        expr = {(): c} if c else {}
    return MultiPoly(p.ctx, p.nvars, _subst_terms(p.ctx, p.terms, {var: expr}))


def _subst_terms(ctx: FieldCtx, terms: Mapping, smap: Mapping[int, Mapping]) -> dict:
    """Simultaneous substitution of linear expressions (dicts) for variables."""
    add, mul = ctx._add, ctx._mul
    out: dict = {}
    for m, c in terms.items():
        if not any(v in smap for v in m):
            out[m] = add[out.get(m, 0)][c]
            continue
        partial = {(): c}
        for v in m:
            if v in smap:
                expr = smap[v]
                nxt: dict = {}
                for pm, pc in partial.items():
                    for em, ec in expr.items():
                        k = _mono_mul(pm, em)
                        nxt[k] = add[nxt.get(k, 0)][mul[pc][ec]]
                partial = nxt
            else:
                partial = {_mono_mul(pm, (v,)): pc for pm, pc in partial.items()}
            if not partial:
                break
        for pm, pc in partial.items():
            out[pm] = add[out.get(pm, 0)][pc]
    return {m: c for m, c in out.items() if c}


def _subst_value(ctx: FieldCtx, terms: Mapping, var: int, val: int) -> dict:
    """Fast path for ``var = val``."""
    add, mul = ctx._add, ctx._mul
    out: dict = {}
    for m, c in terms.items():
        if var in m:
            k = 0
            rest = []
            for v in m:
                if v == var:
                    k += 1
                else:
                    rest.append(v)
            for _ in range(k):
                c = mul[c][val]
            if not c:
                continue
            m = tuple(rest)
        out[m] = add[out.get(m, 0)][c]
    return {m: c for m, c in out.items() if c}


@dataclass
class PolySystem:
    ctx: FieldCtx
    nvars: int
    equations: list[MultiPoly]
    names: list[str] | None = None

    def __post_init__(self):
        for e in self.equations:
            if e.ctx != self.ctx or e.nvars != self.nvars:
                raise PolyError("equation over a different ring than the system")

    def add(self, eq: MultiPoly) -> None:
        if eq.ctx != self.ctx or eq.nvars != self.nvars:
            raise PolyError("equation over a different ring than the system")
        self.equations.append(eq)

    def is_satisfied(self, point: Sequence[int]) -> bool:
        return all(e.eval(point) == 0 for e in self.equations)

    def format(self) -> str:
        return "\n".join(f"{e.format(self.names)} = 0" for e in self.equations)

    @classmethod
    def parse(cls, ctx: FieldCtx, nvars: int, text: str, names=None) -> "PolySystem":
        eqs = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" in line:
                lhs, rhs = line.split("=", 1)
                eqs.append(MultiPoly.parse(ctx, nvars, lhs, names) - MultiPoly.parse(ctx, nvars, rhs, names))
            else:
                eqs.append(MultiPoly.parse(ctx, nvars, line, names))
        return cls(ctx, nvars, eqs, list(names) if names else None)


@dataclass
class SolutionSet:
    """All points found, sorted; ``complete`` is False when the search was cut short."""

    ctx: FieldCtx
    nvars: int
    complete: bool
    points: list[tuple[int, ...]]
    nodes: int = 0
    truncated_by: str | None = None

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def to_json(self) -> dict:
        return {
            "complete": self.complete,
            "nodes": self.nodes,
            "truncated_by": self.truncated_by,
            "points": [[self.ctx.format(v) for v in pt] for pt in self.points],
        }


# ---------------------------------------------------------------------------
# Linear elimination


class _Inconsistent(Exception):
    pass


def _mono_key(m: Monomial):
    return (-len(m), m)


def _linearize(ctx: FieldCtx, eqs: list[dict]) -> list[dict]:
    """Row-reduce the system with each monomial as a column, higher degree first.

    The result spans the same equations, so it has the same solutions; any
    linear consequence of the input shows up as a row of degree <= 1.
    """
    monos = sorted({m for e in eqs for m in e}, key=_mono_key)
    col = {m: i for i, m in enumerate(monos)}
    M = np.zeros((len(eqs), len(monos)), dtype=np.uint8)
    for r, e in enumerate(eqs):
        for m, c in e.items():
            M[r, col[m]] = c
    red, piv = rref_codes(ctx, M)
    if piv and monos[piv[-1]] == ():
        raise _Inconsistent
    out = []
    for r in range(len(piv)):
        nz = np.flatnonzero(red[r])
        out.append({monos[j]: int(red[r, j]) for j in nz})
    return out


def _linear_round(ctx: FieldCtx, eqs: list[dict]):
    """Reduce the system and read off its linear rows.

    Returns (substitution map var -> expr dict or None, remaining nonlinear
    eqs).  Pivots are the least-index variables of their rows.
    """
    eqs = _linearize(ctx, eqs)
    smap = {}
    rest = []
    neg = ctx._neg
    for e in eqs:
        if all(len(m) <= 1 for m in e):
            # leading coefficient is 1 after reduction
            v = min(m[0] for m in e if m)
            smap[v] = {m: neg[c] for m, c in e.items() if m != (v,)}
        else:
            rest.append(e)
    return (smap or None), rest


def _reduce(ctx: FieldCtx, eqs: list[dict], elim: list):
    """Linear propagation to a fixed point; appends eliminations to ``elim``."""
    while True:
        if not eqs:
            return eqs
        smap, rest = _linear_round(ctx, eqs)
        if smap is None:
            return rest
        elim.append(smap)
        eqs = []
        for e in rest:
            s = _subst_terms(ctx, e, smap)
            if s:
                if all(not m for m in s):
                    raise _Inconsistent
                eqs.append(s)


def linear_reduce(s: PolySystem) -> tuple[PolySystem, dict[int, MultiPoly], bool]:
    """Eliminate variables through linear equations until none remain.

    Returns the reduced system, the eliminated variables as expressions in
    the surviving variables, and an inconsistency flag.
    """
    ctx, n = s.ctx, s.nvars
    elim: list = []
    try:
        rest = _reduce(ctx, [dict(e.terms) for e in s.equations if e.terms], elim)
    except _Inconsistent:
        return PolySystem(ctx, n, [MultiPoly.constant(ctx, n, 1)], s.names), {}, True
    # express every eliminated variable in surviving variables only
    resolved: dict[int, dict] = {}
    for smap in reversed(elim):
        for v, expr in smap.items():
            resolved[v] = _subst_terms(ctx, expr, resolved)
    assign = {v: MultiPoly(ctx, n, e) for v, e in sorted(resolved.items())}
    return PolySystem(ctx, n, [MultiPoly(ctx, n, e) for e in rest], s.names), assign, False


# ---------------------------------------------------------------------------
# Search


class _BudgetOut(Exception):
    pass


class _Enough(Exception):
    pass


def _pick(eqs: list[dict]) -> int:
    best = None
    for idx, e in enumerate(eqs):
        deg = max(len(m) for m in e)
        key = (deg, len(e), idx)
        if best is None or key < best[0]:
            best = (key, e)
    return min(v for m in best[1] for v in m)


class _DictEngine:
    """Search state as a list of sparse equations; any field, any degree."""

    def __init__(self, ctx: FieldCtx, eqs: list[dict]):
        self.ctx = ctx
        self.root = [e for e in eqs if e]

    def reduce(self, eqs, elim):
        return _reduce(self.ctx, eqs, elim)

    @staticmethod
    def empty(eqs) -> bool:
        return not eqs

    @staticmethod
    def pick(eqs) -> int:
        return _pick(eqs)

    def assign(self, eqs, v: int, val: int):
        out = []
        for e in eqs:
            t = _subst_value(self.ctx, e, v, val)
            if t:
                if len(t) == 1 and () in t:
                    return None
                out.append(t)
        return out


class _DenseEngine:
    """Search state as a dense coefficient matrix over every monomial of degree <= 2.

    Prime fields only.  Columns: ``x_i x_j`` (i <= j, lexicographic), then
    ``x_i``, then the constant, matching the sparse engine's monomial order,
    so both engines visit the same search tree.
    """

    def __init__(self, ctx: FieldCtx, nvars: int, eqs: list[dict]):
        self.ctx = ctx
        self.p = ctx.p
        self.nv = nv = nvars
        self.qidx = np.zeros((nv, nv), dtype=np.intp)
        self.cols: list[Monomial] = []
        for i in range(nv):
            for j in range(i, nv):
                self.qidx[i, j] = self.qidx[j, i] = len(self.cols)
                self.cols.append((i, j))
        self.Q = len(self.cols)
        self.cols.extend((i,) for i in range(nv))
        self.cols.append(())
        self.const = self.Q + nv
        big = nv + 1
        self.colmin = np.array([m[0] if m else big for m in self.cols], dtype=np.intp)
        ext = [i for (i, j) in self.cols[:self.Q]] + list(range(nv)) + [nv]
        ext2 = [j for (i, j) in self.cols[:self.Q]] + [nv] * (nv + 1)
        self._pair = np.ascontiguousarray(np.array([ext, ext2], dtype=np.intp).T)
        self._ext = np.zeros((nv + 1, nv + 1), dtype=np.intp)
        self._ext[self._pair[:, 0], self._pair[:, 1]] = np.arange(len(self.cols))
        self._ext[self._pair[:, 1], self._pair[:, 0]] = np.arange(len(self.cols))
        self.coldeg = np.array([len(m) for m in self.cols], dtype=np.intp)
        col = {m: c for c, m in enumerate(self.cols)}
        E = np.zeros((len(eqs), len(self.cols)), dtype=np.int64)
        for r, e in enumerate(eqs):
            for m, c in e.items():
                E[r, col[m]] = c
        self.root = E[E.any(axis=1)]

    def _subst(self, E: np.ndarray, vs: list[int], Dk: np.ndarray) -> np.ndarray:
        """Substitute ``x_v = Dk[t] . (x, 1)`` for ``v = vs[t]`` into every row at once.

        The right-hand sides must not mention any ``vs`` variable.
        """
        slot = np.full(self.nv + 1, -1, dtype=np.intp)
        slot[vs] = np.arange(len(vs))
        hit = slot[self._pair]
        cols = np.flatnonzero((hit >= 0).any(axis=1))
        nz = [np.flatnonzero(row) for row in Dk]
        ptr = np.zeros(len(vs) + 1, dtype=np.intp)
        ptr[1:] = np.cumsum([len(x) for x in nz])
        idx = np.concatenate(nz).astype(np.intp) if nz else np.zeros(0, dtype=np.intp)
        return _backend.subst_quadratic(np.ascontiguousarray(E, dtype=np.int64), cols, self._pair, slot,
                                        np.ascontiguousarray(Dk, dtype=np.int64), ptr, idx, self._ext,
                                        self.p)

    def reduce(self, E, elim):
        p, Q, nv = self.p, self.Q, self.nv
        while True:
            if E.shape[0] == 0:
                return E
            red, piv = rref_codes(self.ctx, E.astype(np.uint8))
            r = len(piv)
            if r and piv[-1] == self.const:
                raise _Inconsistent
            red = red[:r].astype(np.int64)
            lin = [k for k in range(r) if piv[k] >= Q]
            if not lin:
                return red
            quad = red[[k for k in range(r) if piv[k] < Q]]
            vs = [int(piv[k] - Q) for k in lin]
            Dk = (-red[lin, Q:]) % p
            Dk[np.arange(len(vs)), vs] = 0
            smap = {}
            for v, row in zip(vs, Dk):
                expr = {(int(l),): int(row[l]) for l in np.flatnonzero(row[:nv])}
                if row[nv]:
                    expr[()] = int(row[nv])
                smap[v] = expr
            elim.append(smap)
            if quad.shape[0]:
                quad = self._subst(quad, vs, Dk)
                quad = quad[quad.any(axis=1)]
                if quad.shape[0] and (quad[:, :self.const] == 0).all(axis=1).any():
                    raise _Inconsistent
            E = quad

    @staticmethod
    def empty(E) -> bool:
        return E.shape[0] == 0

    def pick(self, E) -> int:
        nz = E != 0
        deg = np.where(nz, self.coldeg, 0).max(axis=1)
        size = nz.sum(axis=1)
        order = np.lexsort((np.arange(E.shape[0]), size, deg))
        row = order[0]
        return int(self.colmin[nz[row]].min())

    def assign(self, E, v: int, val: int):
        Dk = np.zeros((1, self.nv + 1), dtype=np.int64)
        Dk[0, self.nv] = val
        out = self._subst(E, [v], Dk)
        out = out[out.any(axis=1)]
        if out.shape[0] and (out[:, :self.const] == 0).all(axis=1).any():
            return None
        return out


def _engine(s: PolySystem, dense: bool | None):
    eqs = [dict(e.terms) for e in s.equations if e.terms]
    ok = s.ctx.k == 1 and all(len(m) <= 2 for e in eqs for m in e) and 0 < s.nvars <= 160
    if dense is None:
        dense = ok
    if dense and not ok:
        raise PolyError("dense engine needs a prime field, degree <= 2 and 1..160 variables")
    return _DenseEngine(s.ctx, s.nvars, eqs) if dense else _DictEngine(s.ctx, eqs)


def solve_all(s: PolySystem, budget: int = DEFAULT_NODE_BUDGET, max_solutions: int | None = None,
              dense: bool | None = None) -> SolutionSet:
    """Enumerate every solution in ``F_q^nvars``.

    Depth-first: linear propagation, then branching on the least-index
    variable of the first minimal (degree, size) equation, values in code
    order.  Each search node and each enumerated point of a free block is
    charged one unit of ``budget``.  With ``max_solutions`` the search stops
    early once that many points are found; the set is then not complete.

    Propagation row-reduces the system with monomials as columns (higher
    degree first) and eliminates the pivot variable of every linear row.
    ``dense`` picks the matrix engine (prime fields, degree <= 2); by
    default it is used whenever it applies.
    """
    if budget < 1:
        raise PolyError("budget must be >= 1")
    ctx, n, q = s.ctx, s.nvars, s.ctx.q
    eng = _engine(s, dense)
    state = {"nodes": 0}
    found: set[tuple[int, ...]] = set()

    def charge():
        state["nodes"] += 1
        if state["nodes"] > budget:
            raise _BudgetOut

    def emit(elim):
        bound = set()
        for smap in elim:
            bound.update(smap)
        free = [v for v in range(n) if v not in bound]
        for vals in itertools.product(range(q), repeat=len(free)):
            charge()
            pt = [0] * n
            for v, x in zip(free, vals):
                pt[v] = x
            for smap in reversed(elim):
                for v, expr in smap.items():
                    pt[v] = _eval(ctx, expr, pt)
            found.add(tuple(pt))
            if max_solutions is not None and len(found) >= max_solutions:
                raise _Enough

    def search(sys_, elim):
        charge()
        elim = list(elim)
        try:
            sys_ = eng.reduce(sys_, elim)
        except _Inconsistent:
            return
        if eng.empty(sys_):
            emit(elim)
            return
        v = eng.pick(sys_)
        for val in range(q):
            sub = eng.assign(sys_, v, val)
            if sub is None:
                charge()
                continue
            search(sub, elim + [{v: {(): val} if val else {}}])

    complete, why = True, None
    try:
        search(eng.root, [])
    except _BudgetOut:
        complete, why = False, "budget"
        state["nodes"] = budget
    except _Enough:
        complete, why = False, "max_solutions"
    for pt in found:
        if not s.is_satisfied(pt):
            raise AssertionError(f"solver produced a non-solution {pt}")
    return SolutionSet(ctx, n, complete, sorted(found), state["nodes"], why)


def brute_force(s: PolySystem, limit: int = 2_000_000) -> SolutionSet:
    """Evaluate every point of ``F_q^nvars``; the oracle for :func:`solve_all`."""
    ctx, n, q = s.ctx, s.nvars, s.ctx.q
    total = q**n
    if total > limit:
        raise PolyError(f"{total} points exceed the brute-force limit {limit}")
    grid = np.array(list(itertools.product(range(q), repeat=n)), dtype=np.uint8).reshape(total, n)
    ok = np.ones(total, dtype=bool)
    for e in s.equations:
        acc = np.zeros(total, dtype=np.uint8)
        for m, c in e.terms.items():
            v = np.full(total, c, dtype=np.uint8)
            for x in m:
                v = ctx.mul_table[v, grid[:, x]]
            acc = ctx.add_table[acc, v]
        ok &= acc == 0
    pts = sorted(tuple(int(x) for x in row) for row in grid[ok])
    return SolutionSet(ctx, n, True, pts, total)


__all__ = [
    "MultiPoly", "PolySystem", "SolutionSet", "PolyError", "substitute", "linear_reduce",
    "solve_all", "brute_force", "DEFAULT_NODE_BUDGET",
]
