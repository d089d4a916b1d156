from __future__ import annotations

import numpy as np
import pytest

from modlie.construct import hamiltonian_p2, jacobson_witt, psl, sl
from modlie.derive import der_lie, derivations, out_solvability
from modlie.field import ff_make
from modlie.lie import g_inf_derived, is_perfect
from modlie.matrix import Subspace
from modlie.taut import section_system, split_section_search, verify_section, section_matrices, is_taut

F5 = ff_make(5)


def _commutator_mod_p(X, Y, p):
    return (X.astype(np.int64) @ Y - Y.astype(np.int64) @ X) % p


def test_out_zero(sl2_f5):
    v = is_taut(sl2_f5)
    assert v.taut and v.reason == "OutZero" and v.complete


@pytest.mark.parametrize("make_g", [lambda: psl(5, F5), lambda: hamiltonian_p2(F5)])
def test_out_solvable_perfect(make_g):
    g = make_g()
    v = is_taut(g)
    assert v.taut and v.reason == "OutSolvablePerfect"


@pytest.mark.parametrize("make_g", [
    lambda: psl(5, F5), lambda: hamiltonian_p2(F5), lambda: jacobson_witt(1, F5), lambda: sl(3, F5),
])
def test_solvable_perfect_harness(make_g):
    # wherever that criterion applies, the perfect core of Der sits inside Inn
    g = make_g()
    d = derivations(g)
    if not (is_perfect(g) and out_solvability(d).length is not None):
        pytest.skip("criterion does not apply")
    core = g_inf_derived(der_lie(d))
    flat = d.ctx.matmul(core.basis, d.der.basis) if core.dim else np.zeros((0, g.n**2), np.uint8)
    assert Subspace(d.ctx, g.n**2, flat) <= d.inn
    assert core.dim >= d.dim_inn


def test_psl5_section_found_and_verified():
    g = psl(5, F5)
    d = derivations(g)
    res = split_section_search(d)
    assert res.status == "found" and res.A.shape == (23, 1)
    assert verify_section(d, res.A)
    S = section_matrices(d, res.A).reshape(-1, g.n, g.n)
    # projection onto Out is the identity
    assert np.array_equal(d.out_coords(S.reshape(1, -1)), np.eye(1, dtype=np.uint8))
    assert not _commutator_mod_p(S[0], S[0], 5).any()


def test_section_system_shape(psl3):
    d = derivations(psl3)
    s = section_system(d)
    assert s.nvars == d.dim_inn * d.dim_out == 49
    assert all(e.degree <= 2 for e in s.equations)


def test_budget_gives_unknown(psl3):
    d = derivations(psl3)
    res = split_section_search(d, budget=50)
    assert res.status == "inconclusive" and not res.complete
    v = is_taut(psl3, budget=50, d=d)
    assert v.tag == "Unknown" and not v.complete


def test_verdict_monotone_in_budget(psl3):
    d = derivations(psl3)
    tags = [is_taut(psl3, budget=b, d=d).tag for b in (1, 10, 100, 1000)]
    # small budgets may only be inconclusive, never a definite opposite verdict
    assert set(tags) <= {"Unknown", "Taut"}
    if "Taut" in tags:
        assert tags[tags.index("Taut"):] == ["Taut"] * (len(tags) - tags.index("Taut"))


def test_verify_section_rejects_garbage(psl3):
    d = derivations(psl3)
    A = np.ones((d.dim_inn, d.dim_out), dtype=np.uint8)
    assert not verify_section(d, A)
