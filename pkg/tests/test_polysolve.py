from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modlie import _backend
from modlie.field import FieldElem, ff_make
from modlie.polysolve import (MultiPoly, PolyError, PolySystem, brute_force, linear_reduce, solve_all,
                              substitute)

F2, F3, F4, F5 = ff_make(2), ff_make(3), ff_make(2, 2, "t^2+t+1"), ff_make(5)


def test_parse_format_roundtrip():
    p = MultiPoly.parse(F3, 3, "x0*x1 + 2*x2 + 1")
    assert MultiPoly.parse(F3, 3, p.format()) == p
    assert p.degree == 2 and p.variables() == {0, 1, 2}
    assert p([1, 1, 0]) == 2


def test_arithmetic(F3):
    x, y = MultiPoly.var(F3, 2, 0), MultiPoly.var(F3, 2, 1)
    assert (x + y) ** 3 == x**3 + y**3
    assert (x - x).is_zero()
    assert (x * y - y * x).is_zero()


def test_substitute():
    p = MultiPoly.parse(F3, 2, "x0*x1 + x0")
    assert substitute(p, 0, 2) == MultiPoly.parse(F3, 2, "2*x1 + 2")
    q = substitute(p, 0, MultiPoly.parse(F3, 2, "x1 + 1"))
    assert q == MultiPoly.parse(F3, 2, "x1^2 + 2*x1 + 1")
    with pytest.raises(PolyError):
        substitute(p, 0, MultiPoly.parse(F3, 2, "x1^2"))
    with pytest.raises(PolyError):
        substitute(p, 5, 1)


def test_linear_reduce():
    s = PolySystem.parse(F3, 3, "x0 + x1 = 1\nx1 + x2 = 0\nx0*x2 = 2")
    rest, assign, bad = linear_reduce(s)
    assert not bad
    assert len(assign) == 2
    pts = brute_force(s).points
    assert pts == [(2, 2, 1)]
    for pt in pts:
        for v, e in assign.items():
            assert e(pt) == pt[v]
    _, _, bad = linear_reduce(PolySystem.parse(F3, 2, "x0 + x1 = 1\nx0 + x1 = 2"))
    assert bad


@pytest.mark.parametrize("dense", [None, False])
def test_solve_examples(dense):
    s = PolySystem.parse(F3, 2, "x0*x1 = 1\nx0 + x1 = 0")
    r = solve_all(s, dense=dense)
    assert r.complete and r.points == []
    s = PolySystem.parse(F5, 2, "x0*x1 = 1\nx0 + x1 = 0")
    assert solve_all(s, dense=dense).points == [(2, 3), (3, 2)]
    s = PolySystem(F2, 3, [])
    assert len(solve_all(s, dense=dense)) == 8


def test_budget_and_max_solutions():
    s = PolySystem(F3, 4, [MultiPoly.parse(F3, 4, "x0*x1 + x2*x3")])
    r = solve_all(s, budget=3)
    assert not r.complete and r.truncated_by == "budget"
    r = solve_all(s, max_solutions=2)
    assert len(r) == 2 and r.truncated_by == "max_solutions"
    with pytest.raises(PolyError):
        solve_all(s, budget=0)


def test_dense_rejects_extension_field():
    s = PolySystem.parse(F4, 2, "x0*x1 = 1")
    with pytest.raises(PolyError):
        solve_all(s, dense=True)
    assert solve_all(s).points == brute_force(s).points


def _random_system(ctx, rng, n, m, deg):
    eqs = []
    for _ in range(m):
        terms = {}
        for _ in range(rng.integers(1, 6)):
            k = rng.integers(0, deg + 1)
            mono = tuple(sorted(int(v) for v in rng.integers(0, n, size=k)))
            terms[mono] = int(rng.integers(1, ctx.q))
        eqs.append(MultiPoly(ctx, n, terms))
    return PolySystem(ctx, n, eqs)


def _systems():
    rng = np.random.default_rng(20240611)
    out = []
    for i in range(200):
        ctx = (F2, F3, F4)[i % 3]
        nmax = {2: 12, 3: 8, 4: 6}[ctx.q]
        n = int(rng.integers(1, nmax + 1))
        deg = 3 if i % 7 == 0 else 2
        out.append(_random_system(ctx, rng, n, int(rng.integers(1, n + 3)), deg))
    return out


SYSTEMS = _systems()


@pytest.mark.parametrize("chunk", range(4))
def test_agrees_with_brute_force(chunk):
    for s in SYSTEMS[chunk::4]:
        ref = brute_force(s).points
        r = solve_all(s)
        assert r.complete and r.points == ref
        if s.ctx.k == 1 and all(e.degree <= 2 for e in s.equations):
            assert solve_all(s, dense=False).points == ref


def test_engines_visit_same_tree():
    for s in SYSTEMS[:60]:
        if s.ctx.k == 1 and all(e.degree <= 2 for e in s.equations):
            a, b = solve_all(s, dense=True), solve_all(s, dense=False)
            assert a.nodes == b.nodes and a.points == b.points


def test_deterministic():
    s = SYSTEMS[5]
    runs = [solve_all(s).to_json() for _ in range(3)]
    assert runs[0] == runs[1] == runs[2]


@pytest.mark.skipif(_backend.BACKEND != "cython", reason="compiled core not built")
def test_backends_give_same_search():
    picks = [s for s in SYSTEMS if s.ctx.k == 1 and all(e.degree <= 2 for e in s.equations)][:30]
    ref = [solve_all(s, dense=True).to_json() for s in picks]
    _backend.use("numpy")
    try:
        got = [solve_all(s, dense=True).to_json() for s in picks]
    finally:
        _backend.use("cython")
    assert got == ref


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([2, 3, 5]))
def test_solutions_satisfy(seed, p):
    ctx = ff_make(p)
    rng = np.random.default_rng(seed)
    n = {2: 8, 3: 5, 5: 4}[p]
    s = _random_system(ctx, rng, n, 3, 2)
    r = solve_all(s)
    assert all(s.is_satisfied(pt) for pt in r)
    assert len(r) == len(brute_force(s))


def test_substitution_examples():
    p = MultiPoly.parse(F3, 2, "x0*x1 + x1")
    assert substitute(p, 0, 1) == MultiPoly.parse(F3, 2, "2*x1")
    t = F4.parse("t")
    q = MultiPoly.parse(F4, 1, "x0^2 + x0")
    assert substitute(q, 0, FieldElem(F4, t)) == MultiPoly.constant(F4, 1, 1)
    z = MultiPoly(F3, 2)
    assert substitute(z, 1, 2).is_zero()


def test_linear_reduce_examples():
    _, assign, bad = linear_reduce(PolySystem.parse(F3, 2, "x0 + x1 = 1\nx0 = 2"))
    assert not bad and {v: e.eval([0, 0]) for v, e in assign.items()} == {0: 2, 1: 2}
    assert linear_reduce(PolySystem.parse(F3, 1, "x0 = 1\nx0 = 2"))[2]
    rest, assign, bad = linear_reduce(PolySystem.parse(F3, 3, "x0*x1 + 1 = 0\nx1 + x2 = 0"))
    assert not bad and set(assign) == {1}
    assert assign[1] == MultiPoly.parse(F3, 3, "2*x2")
    assert len(rest.equations) == 1 and rest.equations[0].variables() == {0, 2}


@pytest.mark.parametrize("ctx,text,want", [
    (F2, "x0^2 + x0", [(0,), (1,)]),
    (F2, "x0^2 + x0 + 1", []),
    (F4, "x0^2 + x0 + 1", [(2,), (3,)]),
    (F4, "x0^4 + x0", [(0,), (1,), (2,), (3,)]),
])
def test_univariate_examples(ctx, text, want):
    r = solve_all(PolySystem.parse(ctx, 1, text))
    assert r.complete and r.points == want
