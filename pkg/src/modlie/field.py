"""Exact arithmetic in F_p and F_{p^k}, plus univariate polynomial utilities.

Elements of F_q are encoded as integers ``0 <= v < q``: the coefficient
vector ``(c_0, ..., c_{k-1})`` of ``c_0 + c_1 t + ... + c_{k-1} t^{k-1}``
maps to ``sum(c_i * p**i)``.  Every array-valued routine in the package
works on ``uint8`` arrays of such codes, so ``q`` is capped at 256.
:class:`FieldElem` wraps a single code for the public API.
"""

from __future__ import annotations

import itertools
import math
import re
from functools import lru_cache, reduce
from typing import Iterable, Sequence

import numpy as np

MAX_FIELD_SIZE = 256
DEFAULT_FACTOR_BUDGET = 2_000_000


class FieldError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would exceed its configured bound."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


class FieldCtx:
    """Arithmetic context for F_q with q = p^k.

    ``modulus`` is the tuple of low-degree-first coefficients of a monic
    irreducible polynomial of degree ``k`` (``None`` for prime fields).
    Instances are immutable; build them with :func:`ff_make`.
    """

    __slots__ = (
        "p", "k", "q", "modulus", "_add", "_mul", "_neg", "_inv",
        "add_table", "mul_table", "neg_table", "inv_table", "sub_table", "_digits",
    )

    def __init__(self, p: int, k: int, modulus: tuple[int, ...] | None):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        q = self.q
        digits = np.array(
            [[(v // p**i) % p for i in range(k)] for v in range(q)], dtype=np.int64
        ).reshape(q, k)
        self._digits = digits
        add = np.zeros((q, q), dtype=np.uint8)
        mul = np.zeros((q, q), dtype=np.uint8)
        powers = np.array([p**i for i in range(k)], dtype=np.int64)
        for a in range(q):
            add[a] = ((digits[a] + digits) % p) @ powers
            for b in range(a, q):
                c = self._polymul_codes(digits[a], digits[b]) @ powers
                mul[a, b] = mul[b, a] = c
        neg = ((-digits) % p) @ powers
        inv = np.zeros(q, dtype=np.uint8)
        for a in range(1, q):
            inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
        self.add_table = add
        self.mul_table = mul
        self.neg_table = neg.astype(np.uint8)
        self.inv_table = inv
        self.sub_table = add[:, self.neg_table]
        for t in (self.add_table, self.mul_table, self.neg_table, self.inv_table, self.sub_table):
            t.setflags(write=False)
        self._add = add.tolist()
        self._mul = mul.tolist()
        self._neg = self.neg_table.tolist()
        self._inv = inv.tolist()

    def _polymul_codes(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        k, p = self.k, self.p
        prod = np.convolve(a, b) % p
        if k > 1:
            mod = self.modulus
            for d in range(len(prod) - 1, k - 1, -1):
                c = prod[d]
                if c:
                    for i in range(k):
                        prod[d - k + i] = (prod[d - k + i] - c * mod[i]) % p
            prod = prod[:k]
        return prod[:k]

    # -- identity -------------------------------------------------------

    def _key(self):
        return (self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldCtx({self.spec()})"

    @property
    def is_prime(self) -> bool:
        return self.k == 1

    def spec(self) -> str:
        """Field literal as used in ``.lie`` headers."""
        if self.k == 1:
            return str(self.p)
        return f"{self.p}^{self.k} {format_poly_coeffs(self.modulus, self.p, var='t')}"

    # -- scalar arithmetic on codes --------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + self.spec())
        return self._inv[a]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self._mul[r][a]
            a = self._mul[a][a]
            e >>= 1
        return r

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` in the prime subfield."""
        return n % self.p

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self._digits[a])

    def from_coeffs(self, cs: Sequence[int]) -> int:
        if len(cs) > self.k:
            raise FieldError(f"too many coefficients for {self.spec()}")
        return sum((c % self.p) * self.p**i for i, c in enumerate(cs))

    def elem(self, a: int) -> "FieldElem":
        return FieldElem(self, a)

    def elements(self) -> list["FieldElem"]:
        return [FieldElem(self, a) for a in range(self.q)]

    # -- literals --------------------------------------------------------

    def format(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        return format_poly_coeffs(self.coeffs(a), self.p, var="t")

    def parse(self, text: str) -> int:
        """Parse an element literal: an integer, or a polynomial in ``t``."""
        s = text.strip().replace(" ", "")
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        if re.fullmatch(r"[+-]?\d+", s):
            return self.from_int(int(s))
        cs = parse_poly_coeffs(s, "t")
        if len(cs) > self.k:
            raise FieldError(f"element literal {text!r} has degree >= {self.k}")
        return self.from_coeffs(cs)

    # -- vectorised arithmetic on uint8 arrays ----------------------------

    def vadd(self, a, b):
        if self.k == 1:
            return ((np.asarray(a, dtype=np.int16) + b) % self.p).astype(np.uint8)
        return self.add_table[a, b]

    def vsub(self, a, b):
        if self.k == 1:
            return ((np.asarray(a, dtype=np.int16) - b) % self.p).astype(np.uint8)
        return self.sub_table[a, b]

    def vneg(self, a):
        return self.neg_table[a]

    def vmul(self, a, b):
        if self.k == 1:
            return ((np.asarray(a, dtype=np.int32) * b) % self.p).astype(np.uint8)
        return self.mul_table[a, b]

    def vinv(self, a):
        return self.inv_table[a]

    def matmul(self, a, b) -> np.ndarray:
        """Matrix product over F_q of two uint8 code arrays (2-D)."""
        a = np.asarray(a)
        b = np.asarray(b)
        p, k = self.p, self.k
        if k == 1:
            return ((a.astype(np.int64) @ b.astype(np.int64)) % p).astype(np.uint8)
        da = [self._digits[a, i] for i in range(k)]
        db = [self._digits[b, i] for i in range(k)]
        parts = [None] * (2 * k - 1)
        for i in range(k):
            for j in range(k):
                term = da[i] @ db[j]
                parts[i + j] = term if parts[i + j] is None else parts[i + j] + term
        mod = self.modulus
        for d in range(2 * k - 2, k - 1, -1):
            c = parts[d] % p
            for i in range(k):
                if mod[i]:
                    parts[d - k + i] = parts[d - k + i] - c * mod[i]
        out = np.zeros(parts[0].shape, dtype=np.int64)
        for i in range(k - 1, -1, -1):
            out = out * p + (parts[i] % p)
        return out.astype(np.uint8)

    def einsum(self, subscripts: str, a, b) -> np.ndarray:
        """Two-operand ``np.einsum`` contraction carried out over F_q."""
        a = np.asarray(a)
        b = np.asarray(b)
        p, k = self.p, self.k
        if k == 1:
            return (np.einsum(subscripts, a.astype(np.int64), b.astype(np.int64), optimize=True) % p).astype(np.uint8)
        parts = [None] * (2 * k - 1)
        for i in range(k):
            for j in range(k):
                term = np.einsum(subscripts, self._digits[a, i], self._digits[b, j], optimize=True)
                parts[i + j] = term if parts[i + j] is None else parts[i + j] + term
        mod = self.modulus
        for d in range(2 * k - 2, k - 1, -1):
            c = parts[d] % p
            for i in range(k):
                if mod[i]:
                    parts[d - k + i] = parts[d - k + i] - c * mod[i]
        out = np.zeros(parts[0].shape, dtype=np.int64)
        for i in range(k - 1, -1, -1):
            out = out * p + (parts[i] % p)
        return out.astype(np.uint8)

    def dot(self, a, b) -> int:
        return int(self.matmul(np.asarray(a).reshape(1, -1), np.asarray(b).reshape(-1, 1))[0, 0])


class FieldElem:
    """An element of a finite field, in canonical form."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldCtx, value: int):
        if not 0 <= value < ctx.q:
            raise FieldError(f"code {value} out of range for {ctx.spec()}")
        self.ctx = ctx
        self.value = int(value)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.coeffs(self.value)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise FieldError("field mismatch")
            return other.value
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.sub(o, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.mul(self.value, o))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.value))

    def __truediv__(self, other):
        o = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.mul(self.value, self.ctx.inv(o)))

    def __pow__(self, e: int):
        return FieldElem(self.ctx, self.ctx.pow(self.value, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ctx.from_int(other) and (self.ctx.k == 1 or 0 <= other < self.ctx.p)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.value))

    def __lt__(self, other):
        return self.value < other.value

    def __repr__(self):
        return f"FieldElem({self.ctx.format(self.value)} in F_{self.ctx.q})"

    def __str__(self):
        return self.ctx.format(self.value)


def ff_arith(ctx: FieldCtx, op: str, *args) -> FieldElem:
    """Dispatch ``op`` in ``{add, mul, neg, inv, pow}`` on field elements."""
    vals = [a.value if isinstance(a, FieldElem) else a for a in args]
    if op == "add":
        return ctx.elem(ctx.add(vals[0], vals[1]))
    if op == "mul":
        return ctx.elem(ctx.mul(vals[0], vals[1]))
    if op == "neg":
        return ctx.elem(ctx.neg(vals[0]))
    if op == "inv":
        return ctx.elem(ctx.inv(vals[0]))
    if op == "pow":
        return ctx.elem(ctx.pow(vals[0], args[1]))
    raise ValueError(f"unknown field operation {op!r}")


# ---------------------------------------------------------------------------
# Polynomial text helpers (shared by field literals and the modulus)


def format_poly_coeffs(cs: Sequence[int], p: int | None = None, var: str = "X") -> str:
    """Format integer coefficients (low degree first) as ``t^2+t+1``."""
    terms = []
    for d in range(len(cs) - 1, -1, -1):
        c = cs[d]
        if not c:
            continue
        if d == 0:
            terms.append(str(c))
        else:
            mono = var if d == 1 else f"{var}^{d}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


def parse_poly_coeffs(text: str, var: str) -> list[int]:
    """Parse ``2*t^2+t+1`` (signed integer coefficients) into a low-first list."""
    s = text.replace(" ", "")
    if not s:
        raise FieldError("empty polynomial literal")
    if s[0] not in "+-":
        s = "+" + s
    pat = re.compile(rf"([+-])(\d+)?\*?({re.escape(var)}(?:\^(\d+))?)?")
    pos = 0
    cs: dict[int, int] = {}
    while pos < len(s):
        m = pat.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise FieldError(f"cannot parse polynomial literal {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) is not None else 1
        if m.group(3) is None:
            deg = 0
        else:
            deg = int(m.group(4)) if m.group(4) is not None else 1
        cs[deg] = cs.get(deg, 0) + sign * coef
        pos = m.end()
    top = max(cs)
    return [cs.get(d, 0) for d in range(top + 1)]


# ---------------------------------------------------------------------------
# Univariate polynomials over a FieldCtx


class UniPoly:
    """Polynomial over F_q with coefficient codes stored low degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable[int]):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(int(c) for c in cs)

    @classmethod
    def from_ints(cls, ctx: FieldCtx, ints: Iterable[int]) -> "UniPoly":
        return cls(ctx, [ctx.from_int(i) for i in ints])

    @classmethod
    def parse(cls, ctx: FieldCtx, text: str, var: str = "X") -> "UniPoly":
        return cls.from_ints(ctx, parse_poly_coeffs(text, var))

    @classmethod
    def monomial(cls, ctx: FieldCtx, deg: int, c: int = 1) -> "UniPoly":
        return cls(ctx, [0] * deg + [c])

    @classmethod
    def linear(cls, ctx: FieldCtx, root: int) -> "UniPoly":
        """The monic polynomial ``X - root``."""
        return cls(ctx, [ctx.neg(root), 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def _sortkey(self):
        # degree first, then coefficients compared low degree first
        return (self.degree, self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        add = self.ctx.add
        return UniPoly(self.ctx, [add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)])

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.ctx, [self.ctx.neg(c) for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        ctx = self.ctx
        if isinstance(other, int):
            return UniPoly(ctx, [ctx.mul(c, other) for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly(ctx, [])
        out = [0] * (len(a) + len(b) - 1)
        add, mul = ctx._add, ctx._mul
        for i, x in enumerate(a):
            if x:
                row = mul[x]
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add[out[i + j]][row[y]]
        return UniPoly(ctx, out)

    def __pow__(self, e: int) -> "UniPoly":
        r = UniPoly(self.ctx, [1])
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ctx = self.ctx
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = ctx.inv(other.lead())
        quot = [0] * max(len(rem) - db, 0)
        for d in range(len(rem) - 1, db - 1, -1):
            c = rem[d]
            if not c:
                continue
            f = ctx.mul(c, inv_lead)
            quot[d - db] = f
            for i, b in enumerate(other.coeffs):
                rem[d - db + i] = ctx.sub(rem[d - db + i], ctx.mul(f, b))
        return UniPoly(ctx, quot), UniPoly(ctx, rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * self.ctx.inv(self.lead())

    def __call__(self, x: int) -> int:
        ctx = self.ctx
        acc = 0
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, x), c)
        return acc

    def eval_matrix(self, m: np.ndarray) -> np.ndarray:
        """Evaluate at a square code matrix (Horner)."""
        ctx = self.ctx
        n = m.shape[0]
        acc = np.zeros((n, n), dtype=np.uint8)
        eye = np.eye(n, dtype=np.uint8)
        for c in reversed(self.coeffs):
            acc = ctx.matmul(acc, m)
            if c:
                acc = ctx.vadd(acc, ctx.vmul(eye, c))
        return acc

    def map(self, emb: "Embedding") -> "UniPoly":
        return UniPoly(emb.dst, [emb.table[c] for c in self.coeffs])

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        return self.format("X")

    def format(self, var: str = "X") -> str:
        ctx = self.ctx
        terms = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            cs = ctx.format(c)
            if "+" in cs:
                cs = f"({cs})"
            mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
            if not mono:
                terms.append(cs)
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        return "+".join(terms) if terms else "0"


def _monic_polys(ctx: FieldCtx, deg: int):
    """Monic polynomials of a given degree, lexicographic low-degree-first."""
    for lower in itertools.product(range(ctx.q), repeat=deg):
        yield UniPoly(ctx, list(lower) + [1])


def poly_factor(ctx: FieldCtx, f: UniPoly, budget: int = DEFAULT_FACTOR_BUDGET,
                max_degree: int | None = None) -> list[tuple[UniPoly, int]]:
    """Factor ``f`` into monic irreducibles by trial division.

    Candidates are enumerated by ascending degree, lexicographically.  The
    result is sorted by (degree, coefficients).  With ``max_degree`` set, only
    factors up to that degree are split off and the remaining cofactor (if
    any) is returned as a final entry with multiplicity 1 and is *not*
    guaranteed irreducible; this is how callers probe for small factors of
    large polynomials.
    """
    if f.is_zero():
        raise FieldError("cannot factor the zero polynomial")
    if f.ctx != ctx:
        raise FieldError("polynomial is over a different field")
    rest = f.monic()
    limit = rest.degree // 2 if max_degree is None else min(max_degree, rest.degree // 2)
    cost = sum(ctx.q**d for d in range(1, limit + 1))
    if cost > budget:
        raise BudgetExceeded(
            f"factoring a degree-{f.degree} polynomial over F_{ctx.q} needs "
            f"{cost} trial divisors; budget exceeded ({budget})"
        )
    factors: list[tuple[UniPoly, int]] = []
    d = 1
    while d <= rest.degree // 2 and (max_degree is None or d <= max_degree):
        for g in _monic_polys(ctx, d):
            if 2 * d > rest.degree:
                break
            mult = 0
            while True:
                qt, r = rest.divmod(g)
                if not r.is_zero():
                    break
                rest, mult = qt, mult + 1
            if mult:
                factors.append((g, mult))
        d += 1
    if rest.degree >= 1:
        # merge with an equal small factor (possible when rest == g)
        for i, (g, m) in enumerate(factors):
            if g == rest:
                factors[i] = (g, m + 1)
                break
        else:
            factors.append((rest, 1))
    factors.sort(key=lambda gm: gm[0]._sortkey())
    return factors


def is_irreducible(ctx: FieldCtx, f: UniPoly, budget: int = DEFAULT_FACTOR_BUDGET) -> bool:
    if f.degree < 1:
        return False
    fs = poly_factor(ctx, f, budget)
    return len(fs) == 1 and fs[0][1] == 1


def poly_roots(ctx: FieldCtx, f: UniPoly) -> dict[FieldElem, int]:
    """All roots of ``f`` in F_q with multiplicities, by exhaustive evaluation."""
    if f.is_zero():
        raise FieldError("the zero polynomial has every element as a root")
    if f.ctx != ctx:
        raise FieldError("polynomial is over a different field")
    roots: dict[FieldElem, int] = {}
    for a in range(ctx.q):
        if f(a) != 0:
            continue
        g, mult = f, 0
        lin = UniPoly.linear(ctx, a)
        while True:
            qt, r = g.divmod(lin)
            if not r.is_zero():
                break
            g, mult = qt, mult + 1
        roots[ctx.elem(a)] = mult
    return roots


@lru_cache(maxsize=None)
def _canonical_modulus(p: int, k: int) -> tuple[int, ...]:
    fp = _prime_field(p)
    for lower in itertools.product(range(p), repeat=k):
        cand = UniPoly(fp, list(lower) + [1])
        if lower[0] == 0:
            continue  # divisible by X
        if is_irreducible(fp, cand):
            return tuple(cand.coeffs)
    raise FieldError(f"no irreducible polynomial of degree {k} over F_{p}")  # pragma: no cover


@lru_cache(maxsize=None)
def _prime_field(p: int) -> FieldCtx:
    return FieldCtx(p, 1, None)


@lru_cache(maxsize=None)
def _cached_ctx(p: int, k: int, modulus: tuple[int, ...]) -> FieldCtx:
    return FieldCtx(p, k, modulus)


def ff_make(p: int, k: int = 1, modulus: UniPoly | Sequence[int] | str | None = None) -> FieldCtx:
    """Build (or fetch the cached) context for F_{p^k}.

    ``modulus`` may be a :class:`UniPoly` over F_p, a low-first coefficient
    sequence, or a string in ``t``.  When omitted for ``k > 1`` the
    lexicographically least monic irreducible of degree ``k`` is used.
    """
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if k < 1:
        raise FieldError("extension degree must be >= 1")
    if p**k > MAX_FIELD_SIZE:
        raise FieldError(f"F_{p}^{k} exceeds the supported field size {MAX_FIELD_SIZE}")
    if k == 1:
        if modulus is not None:
            cs = _modulus_coeffs(p, modulus)
            if len(cs) != 2 or cs[1] != 1:
                raise FieldError("modulus of a prime field must be monic linear")
        return _prime_field(p)
    if modulus is None:
        return _cached_ctx(p, k, _canonical_modulus(p, k))
    cs = _modulus_coeffs(p, modulus)
    if len(cs) != k + 1:
        raise FieldError(f"modulus has degree {len(cs) - 1}, expected {k}")
    if cs[-1] != 1:
        raise FieldError("modulus must be monic")
    if not is_irreducible(_prime_field(p), UniPoly(_prime_field(p), cs)):
        raise FieldError(f"modulus {format_poly_coeffs(cs, p, 't')} is reducible over F_{p}")
    return _cached_ctx(p, k, tuple(cs))


def _modulus_coeffs(p: int, modulus) -> list[int]:
    if isinstance(modulus, UniPoly):
        if modulus.ctx.q != p:
            raise FieldError("modulus must be a polynomial over the prime field")
        cs = list(modulus.coeffs)
    elif isinstance(modulus, str):
        cs = [c % p for c in parse_poly_coeffs(modulus, "t")]
    else:
        cs = [int(c) % p for c in modulus]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def parse_field(text: str) -> FieldCtx:
    """Parse ``3``, ``2^2`` or ``2^2 t^2+t+1``."""
    s = text.strip()
    m = re.fullmatch(r"(\d+)(?:\s*\^\s*(\d+))?(?:\s+(.+))?", s)
    if not m:
        raise FieldError(f"bad field literal {text!r}")
    p = int(m.group(1))
    k = int(m.group(2)) if m.group(2) else 1
    mod = m.group(3)
    if mod is not None and k == 1:
        raise FieldError("a prime field takes no modulus")
    return ff_make(p, k, mod)


# ---------------------------------------------------------------------------
# Extensions and embeddings


class Embedding:
    """Field embedding ``src -> dst`` stored as a lookup table on codes."""

    __slots__ = ("src", "dst", "table", "_np")

    def __init__(self, src: FieldCtx, dst: FieldCtx, table: Sequence[int]):
        self.src = src
        self.dst = dst
        self.table = tuple(int(v) for v in table)
        self._np = np.array(self.table, dtype=np.uint8)

    @classmethod
    def identity(cls, ctx: FieldCtx) -> "Embedding":
        return cls(ctx, ctx, range(ctx.q))

    def is_identity(self) -> bool:
        return self.src == self.dst

    def __call__(self, x):
        if isinstance(x, FieldElem):
            return FieldElem(self.dst, self.table[x.value])
        if isinstance(x, np.ndarray):
            return self._np[x]
        return self.table[x]

    def compose(self, other: "Embedding") -> "Embedding":
        """``other`` after ``self``."""
        return Embedding(self.src, other.dst, [other.table[v] for v in self.table])


def extension(ctx: FieldCtx, m: int) -> tuple[FieldCtx, Embedding]:
    """The degree-``m`` extension of ``ctx`` with its embedding.

    The big field is F_{p^(k*m)} with the canonical modulus; ``t`` of the
    small field is sent to the least code that is a root of its modulus.
    """
    if m == 1:
        return ctx, Embedding.identity(ctx)
    big = ff_make(ctx.p, ctx.k * m)
    if ctx.k == 1:
        return big, Embedding(ctx, big, range(ctx.p))
    mod = UniPoly(big, ctx.modulus)
    beta = next(b for b in range(big.q) if mod(b) == 0)
    powers = [big.pow(beta, i) for i in range(ctx.k)]
    table = []
    for v in range(ctx.q):
        acc = 0
        for c, pw in zip(ctx.coeffs(v), powers):
            acc = big.add(acc, big.mul(c, pw))
        table.append(acc)
    return big, Embedding(ctx, big, table)


def splitting_extension(ctx: FieldCtx, f: UniPoly,
                        budget: int = DEFAULT_FACTOR_BUDGET) -> tuple[FieldCtx, Embedding]:
    """Smallest extension of ``ctx`` over which ``f`` splits into linear factors."""
    if f.is_zero():
        raise FieldError("the zero polynomial has no splitting field")
    degs = [g.degree for g, _ in poly_factor(ctx, f, budget)]
    m = reduce(math.lcm, degs, 1)
    return extension(ctx, m)
