from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modlie.construct import builtin, jacobson_witt, psl, sl
from modlie.derive import (centroid, check_inn_ideal, check_leibniz, derivations, is_central_simple,
                           is_centroid_element, is_derivation, out_heisenberg_profile, out_solvability)
from modlie.field import ff_make
from modlie.lie import LieAlgebra, center, validate
from modlie.matrix import Mat, rank

from test_lie import pool

# dims from an independent dense mod-p elimination (no library code)
ORACLE = {
    "psl3f3-table": (14, 7, 1),
    "w3": (5, 3, 1),
    "g6": (10, 6, 2),
}


@pytest.mark.parametrize("name", sorted(ORACLE))
def test_der_and_centroid_dims_match_oracle(name):
    g = builtin(name)
    d = derivations(g)
    der, inn, cen = ORACLE[name]
    assert (d.dim_der, d.dim_inn, d.dim_out) == (der, inn, der - inn)
    assert centroid(g).dim == cen


def test_psl3_derivations(psl3):
    d = derivations(psl3)
    assert (d.dim_der, d.dim_inn, d.dim_out) == (14, 7, 7)
    s = out_solvability(d)
    assert s.length is None and s.dims == [7]


def test_psl5_derivations():
    d = derivations(psl(5, ff_make(5)))
    assert (d.dim_der, d.dim_out) == (24, 1)
    assert out_solvability(d).length == 1
    assert out_heisenberg_profile(d).dim == 0


def test_abelian_derivations(F3):
    d = derivations(LieAlgebra.abelian(F3, 3))
    assert d.dim_der == 9 and d.dim_inn == 0


def test_witt_out_abelian(witt1_f5):
    d = derivations(witt1_f5)
    s = out_solvability(d)
    assert s.length is not None and s.length <= 1


def test_hamiltonian_out(h5):
    d = derivations(h5)
    # oracle: Der 27, Inn 23, Out derived dims 4, 3, 1, 0
    assert (d.dim_der, d.dim_inn) == (27, 23)
    s = out_solvability(d)
    assert s.dims == [4, 3, 1, 0] and s.length == 3
    prof = out_heisenberg_profile(d)
    assert prof.as_tuple() == (3, 2, 1) and prof.is_heisenberg


def test_centroid_examples(w3, g6, sl2_f5):
    cs = is_central_simple(w3)
    assert cs.centroid_dim == 1 and cs.central_simple
    cs = is_central_simple(g6)
    assert cs.centroid_dim == 2 and cs.simple == "Simple" and not cs.central_simple
    assert centroid(sl2_f5).dim == 1


def test_centroid_is_field_for_g6(g6):
    C = centroid(g6)
    ctx, n = g6.ctx, g6.n
    assert C.contains_identity()
    elems = []
    for coeffs in itertools.product(range(ctx.q), repeat=C.dim):
        v = ctx.matmul(np.array([coeffs], dtype=np.uint8), C.space.basis)[0]
        elems.append(v.reshape(n, n))
    for a in elems:
        assert is_centroid_element(g6, a)
        for b in elems:
            assert C.space.contains(ctx.matmul(a, b).reshape(-1))
        if a.any():
            assert rank(Mat(ctx, a)) == n
            inv = [b for b in elems if np.array_equal(ctx.matmul(a, b), np.eye(n, dtype=np.uint8))]
            assert len(inv) == 1


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 12))
def test_der_invariants(i):
    g = pool()[i]
    d = derivations(g)
    assert check_leibniz(d) and check_inn_ideal(d)
    assert d.dim_out == d.dim_der - g.n + center(g).dim
    for v in d.der.basis:
        assert is_derivation(g, d.matrix(v))
    assert validate(d.out).ok
    assert centroid(g).contains_identity()


@pytest.mark.parametrize("make_g", [
    lambda: sl(2, ff_make(5)), lambda: sl(3, ff_make(5)), lambda: jacobson_witt(1, ff_make(5)),
    lambda: jacobson_witt(1, ff_make(7)), lambda: psl(5, ff_make(5)),
])
def test_out_solvable_length_at_most_three(make_g):
    s = out_solvability(derivations(make_g()))
    assert s.length is not None and s.length <= 3
