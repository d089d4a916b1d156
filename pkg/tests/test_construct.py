from __future__ import annotations

import numpy as np
import pytest

from modlie.construct import (ConstructError, builtin, g6_alpha_product, gl, hamiltonian_p2, jacobson_witt, make,
                              psl, sl)
from modlie.derive import centroid, derivations, out_solvability
from modlie.field import ff_make
from modlie.lie import (center, extend_scalars, is_perfect, is_simple, restrict_scalars, series, validate)


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2), (3, 3), (2, 3), (5, 2), (2, 4), (3, 4)])
def test_sl_psl_dims_and_validity(p, n):
    F = ff_make(p)
    g = sl(n, F)
    assert g.n == n * n - 1 and validate(g).ok
    q = psl(n, F)
    assert q.n == n * n - 1 - (1 if n % p == 0 else 0) and validate(q).ok


def test_classical_examples(F2, F3, F5):
    g = sl(2, F5)
    assert g.n == 3 and center(g).dim == 0 and is_simple(g).simple
    assert center(sl(3, F3)).dim == 1
    a = gl(2, F2)
    assert a.n == 4 and validate(a).ok and not is_perfect(a)
    assert psl(3, F3).n == 7
    assert psl(2, F5) == sl(2, F5)


def test_psl5_dim():
    assert psl(5, ff_make(5)).n == 23


@pytest.mark.parametrize("m,p", [(1, 2), (1, 3), (1, 5), (2, 2), (2, 3), (1, 7)])
def test_witt_dims(m, p):
    g = jacobson_witt(m, ff_make(p))
    assert g.n == m * p**m and validate(g).ok


def test_witt_simplicity(F2, F5):
    assert not is_simple(jacobson_witt(1, F2)).simple
    assert is_simple(jacobson_witt(1, F5)).simple


@pytest.mark.parametrize("p,dim", [(3, 7), (5, 23), (7, 47)])
def test_hamiltonian_dims(p, dim):
    g = hamiltonian_p2(ff_make(p))
    assert g.n == dim == p * p - 2 and validate(g).ok


def test_hamiltonian_p3_matches_psl3_profile(F3, psl3):
    h = hamiltonian_p2(F3)
    dh, dp = derivations(h), derivations(psl3)
    assert (dh.dim_der, dh.dim_out) == (dp.dim_der, dp.dim_out) == (14, 7)
    assert out_solvability(dh).dims == out_solvability(dp).dims
    assert series(h, "derived").dims == series(psl3, "derived").dims
    assert is_simple(h).simple


def test_hamiltonian_rejects_char2(F2):
    with pytest.raises(ConstructError):
        hamiltonian_p2(F2)


def test_builtins(w3, g6, psl3_table):
    assert (w3.n, w3.ctx.q) == (3, 2) and w3.C[0, 1].tolist() == [0, 0, 1]
    assert (g6.n, g6.ctx.q) == (6, 2) and g6.C[1, 4].tolist() == [1, 0, 0, 0, 0, 1]
    assert psl3_table.C[1, 4].tolist() == [0, 0, 0, 0, 0, 0, 2]
    for g in (w3, g6, psl3_table):
        assert validate(g).ok
    with pytest.raises(ConstructError):
        builtin("nope")


def test_g6_matches_restricted_w3_profile(w3, g6):
    r = restrict_scalars(extend_scalars(w3, 2))
    assert series(r, "derived").dims == series(g6, "derived").dims
    dr, dg = derivations(r), derivations(g6)
    assert (dr.dim_der, dr.dim_inn) == (dg.dim_der, dg.dim_inn)
    assert centroid(r).dim == centroid(g6).dim == 2


def test_alpha_family_endpoints(F4, g6_f4):
    assert not g6_alpha_product(F4, 0).any()
    adj = g6_alpha_product(F4, 1)
    iu, ju = np.triu_indices(6, 1)
    assert np.array_equal(adj[iu, ju], g6_f4.C[iu, ju])


def test_make_dispatch(F3):
    assert make("sl", 2, F3) == sl(2, F3)
    assert make("hamiltonian", None, F3).n == 7
    with pytest.raises(ConstructError):
        make("psl", None, F3)
    with pytest.raises(ConstructError):
        make("e8", 1, F3)


def test_psl3_table_from_matrices(psl3_table):
    # e1..e6 are E12 E13 E21 E23 E31 E32, e7 = E11 - E22, everything modulo the identity
    units = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]
    mats = []
    for i, j in units:
        m = np.zeros((3, 3), dtype=np.int64)
        m[i, j] = 1
        mats.append(m)
    mats.append(np.diag([1, -1, 0]))

    def coords(m):
        v = [m[i, j] % 3 for i, j in units]
        a, c = m[0, 0], m[2, 2]
        return v + [(a - c) % 3]

    for i in range(7):
        for j in range(7):
            br = mats[i] @ mats[j] - mats[j] @ mats[i]
            assert coords(br) == psl3_table.C[i, j].tolist()
