from __future__ import annotations

import json

import numpy as np
import pytest
from click.testing import CliRunner
from hypothesis import given, settings
from hypothesis import strategies as st

from modlie.cli import DATA_DIR, FormatError, main, parse_lie, parse_prod, print_lie, print_prod
from modlie.construct import builtin, g6_alpha_product
from modlie.cpa import SymProduct
from modlie.lie import extend_scalars

from test_lie import pool

W3_TEXT = "field 2\ndim 3\n[1,2]=e3\n[1,3]=e1\n[2,3]=e2\n"


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, *args):
    return runner.invoke(main, [str(a) for a in args])


def test_parse_w3_text():
    assert parse_lie(W3_TEXT) == builtin("w3")


def test_shipped_tables_match_builtins():
    assert parse_lie((DATA_DIR / "psl3f3.lie").read_text()) == builtin("psl3f3-table")
    assert parse_lie((DATA_DIR / "g6.lie").read_text()) == builtin("g6")
    assert parse_lie((DATA_DIR / "w3.lie").read_text()) == builtin("w3")


@pytest.mark.parametrize("text,where", [
    ("field 2\ndim 3\n[2,1] = e3\n", "line 3"),
    ("field 2\ndim 3\n[1,2] = e3\n[1,2] = e1\n", "line 4"),
    ("field 2\ndim 3\n[1,2] = e4\n", "line 3"),
    ("field 4\ndim 2\n", "line 1"),
    ("field 3\ndim 2\n[1,2] = 2*q1\n", "line 3"),
])
def test_syntax_errors_carry_line_numbers(text, where):
    with pytest.raises(FormatError, match=where):
        parse_lie(text)


def test_semantic_error_names_triple():
    # [e1,e2]=e1, [e1,e3]=e1, [e2,e3]=e3 over F2 fails Jacobi
    bad = "field 2\ndim 3\n[1,2]=e1\n[1,3]=e2\n[2,3]=e2\n"
    with pytest.raises(Exception, match=r"Jacobi"):
        parse_lie(bad)


@settings(max_examples=13, deadline=None)
@given(st.integers(0, 12))
def test_lie_roundtrip(i):
    g = pool()[i]
    assert parse_lie(print_lie(g)) == g


def test_prod_roundtrip(F4):
    g = extend_scalars(builtin("g6"), 2)
    P = SymProduct(g, g6_alpha_product(F4, F4.parse("t")))
    assert parse_prod(print_prod(P), g) == P


def test_der_json(runner):
    r = run(runner, "der", DATA_DIR / "psl3f3.lie", "--json")
    assert r.exit_code == 0
    doc = json.loads(r.output)
    assert set(doc) == {"algebra", "result", "timings", "budgets", "complete"}
    assert doc["algebra"]["dim"] == 7
    res = doc["result"]
    assert (res["der_dim"], res["inn_dim"], res["out_dim"], res["out_solvable"]) == (14, 7, 7, False)


def test_json_schema_is_stable(runner):
    a = json.loads(run(runner, "centroid", "builtin:g6", "--json").output)
    b = json.loads(run(runner, "centroid", "builtin:g6", "--json").output)
    a.pop("timings"), b.pop("timings")
    assert a == b
    assert a["result"] == {"centroid_dim": 2, "simple": "Simple", "central_simple": False}


def test_cpa_g6_text(runner):
    r = run(runner, "cpa", DATA_DIR / "g6.lie")
    assert r.exit_code == 0
    assert r.output.splitlines()[0] == "2 CPA structures: trivial, adjoint"
    assert "complete: yes" in r.output


def test_taut_small_budget_exit_code(runner):
    r = run(runner, "taut", DATA_DIR / "psl3f3.lie", "--budget", "20")
    assert r.exit_code == 2
    assert r.output.startswith("Unknown")


def test_taut_out_zero(runner, tmp_path):
    out = tmp_path / "sl2.lie"
    assert run(runner, "make", "sl", 2, "--field", 5, "-o", out).exit_code == 0
    r = run(runner, "taut", out)
    assert r.exit_code == 0 and r.output.startswith("Taut (Out = 0)")


def test_info_and_series(runner):
    r = run(runner, "info", "builtin:w3", "--json")
    doc = json.loads(r.output)
    assert r.exit_code == 0 and doc["result"]["simple"] == "Simple" and doc["result"]["perfect"]
    r = run(runner, "series", "builtin:psl3f3-table", "--kind", "lower-central")
    assert r.exit_code == 0 and "[7]" in r.output


def test_validate_reports_invalid(runner, tmp_path):
    p = tmp_path / "bad.lie"
    p.write_text("field 2\ndim 3\n[1,2]=e1\n[1,3]=e2\n[2,3]=e2\n")
    r = run(runner, "validate", p, "--json")
    assert r.exit_code == 1
    doc = json.loads(r.output)
    assert doc["result"]["valid"] is False and len(doc["result"]["witness"]) == 3


def test_input_errors(runner, tmp_path):
    assert run(runner, "der", tmp_path / "missing.lie").exit_code == 1
    assert run(runner, "der", "builtin:nope").exit_code == 1
    p = tmp_path / "key.lie"
    p.write_text("field 2\ndim 3\n[2,1] = e3\n")
    r = run(runner, "info", p)
    assert r.exit_code == 1 and "line 3" in r.output


def test_make_roundtrip(runner, tmp_path):
    p = tmp_path / "w.lie"
    assert run(runner, "make", "witt", 1, "--field", 5, "-o", p).exit_code == 0
    g = parse_lie(p.read_text())
    assert g.n == 5
    assert run(runner, "make", "psl", 3, "--field", "2^2 t^2+t+1").exit_code == 0


def test_cpa_check_and_decompose(runner, tmp_path, F4):
    g = extend_scalars(builtin("g6"), 2)
    lie = tmp_path / "g6f4.lie"
    lie.write_text(print_lie(g))
    prod = tmp_path / "alpha.prod"
    prod.write_text(print_prod(SymProduct(g, g6_alpha_product(F4, F4.parse("t+1")))))
    r = run(runner, "cpa", lie, "--check", prod, "--json")
    assert r.exit_code == 0 and json.loads(r.output)["result"]["class"] == "InnerNontrivial"
    r = run(runner, "decompose", lie, prod, "--json")
    doc = json.loads(r.output)
    assert r.exit_code == 0 and doc["result"]["ok"] and doc["result"]["eigenspaces"] == {"0": 3, "1": 3}
    bad = tmp_path / "bad.prod"
    D = np.zeros((6, 6, 6), dtype=np.uint8)
    D[0, 0, 0] = 1
    bad.write_text(print_prod(SymProduct(g, D)))
    assert run(runner, "cpa", lie, "--check", bad).exit_code == 1


def test_budget_env(runner, monkeypatch):
    monkeypatch.setenv("MODLIE_BUDGET", "20")
    r = run(runner, "taut", "builtin:psl3f3-table", "--json")
    doc = json.loads(r.output)
    assert r.exit_code == 2 and doc["budgets"]["nodes"] == 20 and doc["complete"] is False
