from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modlie.field import (BudgetExceeded, FieldError, UniPoly, extension, ff_arith, ff_make, poly_factor,
                          poly_roots, splitting_extension)

SMALL = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (5, 2), (3, 4)]


def test_ff_make_prime():
    F = ff_make(3)
    assert (F.p, F.k, F.q) == (3, 1, 3)


def test_ff_make_f4(F4):
    assert F4.q == 4 and F4.modulus == (1, 1, 1)


def test_reducible_modulus_rejected():
    with pytest.raises(FieldError):
        ff_make(2, 2, "t^2+1")


def test_non_prime_rejected():
    with pytest.raises(FieldError):
        ff_make(6)


def test_default_modulus_is_least_irreducible():
    # constant term 0 is reducible; t^2+1 has no root mod 3
    assert ff_make(3, 2).modulus == (1, 0, 1)
    # t^3+t^2+1 precedes t^3+t+1 when compared low-degree-first
    assert ff_make(2, 3).modulus == (1, 0, 1, 1)


def test_arith_examples(F3, F4):
    assert ff_arith(F3, "add", 2, 2).value == 1
    t = F4.parse("t")
    assert F4.format(F4.mul(t, t)) == "t+1"
    assert F4.format(F4.inv(t)) == "t+1"
    assert F4.mul(t, F4.parse("t+1")) == 1
    with pytest.raises(ZeroDivisionError):
        F4.inv(0)


@pytest.mark.parametrize("p,k", SMALL)
def test_fermat_exhaustive(p, k):
    F = ff_make(p, k)
    for a in range(1, F.q):
        assert F.pow(a, F.q - 1) == 1


@pytest.mark.parametrize("p,k", [(2, 2), (3, 2), (2, 3), (5, 1)])
def test_field_axioms_exhaustive(p, k):
    F = ff_make(p, k)
    q = F.q
    for a in range(q):
        assert F.add(a, F.neg(a)) == 0
        for b in range(q):
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in range(q):
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_roots_examples(F2, F4):
    f = UniPoly.parse(F2, "X^4+X")  # X(X-1)(X^2+X+1)
    assert {r.value for r in poly_roots(F2, f)} == {0, 1}
    f4 = UniPoly.parse(F4, "X^4+X")
    assert {F4.format(r.value) for r in poly_roots(F4, f4)} == {"0", "1", "t", "t+1"}
    r = poly_roots(F2, UniPoly.parse(F2, "X^2+1"))
    assert {k.value: v for k, v in r.items()} == {1: 2}


def test_factor_examples(F2, F3):
    fs = poly_factor(F3, UniPoly.parse(F3, "X^3-X"))
    assert [str(f) for f, _ in fs] == [str(UniPoly.parse(F3, s)) for s in ("X", "X+1", "X+2")]
    assert poly_factor(F2, UniPoly.parse(F2, "X^2+X+1")) == [(UniPoly.parse(F2, "X^2+X+1"), 1)]
    # trial-division oracle: X^4+X = X (X+1) (X^2+X+1)
    fs = poly_factor(F2, UniPoly.parse(F2, "X^4+X"))
    assert [(f.coeffs, m) for f, m in fs] == [((0, 1), 1), ((1, 1), 1), ((1, 1, 1), 1)]


def test_factor_budget_guard(F3):
    f = UniPoly.parse(F3, "X^30+X+2")
    with pytest.raises(BudgetExceeded):
        poly_factor(F3, f, budget=100)


def test_splitting_extension(F2):
    F, emb = splitting_extension(F2, UniPoly.parse(F2, "X^2+X"))
    assert F == F2 and emb.is_identity()
    F, emb = splitting_extension(F2, UniPoly.parse(F2, "X^2+X+1"))
    assert F.q == 4
    F, emb = splitting_extension(F2, UniPoly.parse(F2, "X^3+X+1"))
    assert F.q == 8
    f = UniPoly.parse(F2, "X^3+X+1").map(emb)
    assert sum(poly_roots(F, f).values()) == 3


def test_extension_embedding_is_homomorphism(F3):
    F9, emb = extension(F3, 2)
    for a in range(3):
        for b in range(3):
            assert emb(F3.add(a, b)) == F9.add(emb(a), emb(b))
            assert emb(F3.mul(a, b)) == F9.mul(emb(a), emb(b))


def _poly(ctx, draw_list):
    cs = [c % ctx.q for c in draw_list]
    if not any(cs):
        cs[-1] = 1
    return UniPoly(ctx, cs)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(2, 1), (3, 1), (2, 2), (5, 1)]), st.lists(st.integers(0, 255), min_size=1, max_size=7))
def test_factor_product_and_roots(pk, coeffs):
    F = ff_make(*pk)
    f = _poly(F, coeffs)
    fs = poly_factor(F, f)
    prod = UniPoly(F, [f.lead()])
    for g, m in fs:
        assert g.lead() == 1
        prod = prod * g**m
    assert prod == f
    for r in poly_roots(F, f):
        assert f(r.value) == 0


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(2, 1), (3, 1)]), st.lists(st.integers(0, 8), min_size=2, max_size=5))
def test_splitting_field_splits(pk, coeffs):
    F = ff_make(*pk)
    f = _poly(F, coeffs)
    if f.degree < 1:
        return
    E, emb = splitting_extension(F, f)
    assert sum(poly_roots(E, f.map(emb)).values()) == f.degree
