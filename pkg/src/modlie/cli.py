"""Command line interface and the ``.lie`` / ``.prod`` text formats.

``.lie`` files::

    # comment
    field 2^2 t^2+t+1
    dim 3
    [1,2] = e3
    [1,3] = (t+1)*e1 + 2*e2

Indices are 1-based; each bracket key ``[i,j]`` needs ``i < j`` and may
appear once.  Omitted pairs are zero.  ``.prod`` files use the same header
and lines ``e1.e2 = ...`` with ``i <= j`` for a symmetric product.
"""

from __future__ import annotations

import json
import os
import re
import sys
import time
from pathlib import Path

import click
import numpy as np

from .field import BudgetExceeded, FieldCtx, FieldError, ff_make
from .lie import LieAlgebra, LieError, center, is_perfect, is_simple, series, validate
from .polysolve import DEFAULT_NODE_BUDGET

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_INTERNAL = 0, 1, 2, 3
DATA_DIR = Path(__file__).parent / "data"


class FormatError(ValueError):
    """Malformed ``.lie`` / ``.prod`` text; the message carries the line number."""


# ---------------------------------------------------------------------------
# text formats

_KEY = re.compile(r"^\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*=\s*(.*)$")
_PKEY = re.compile(r"^[ex](\d+)\s*\.\s*[ex](\d+)\s*=\s*(.*)$")
_TERM = re.compile(r"^(?:(.+?)\s*\*\s*)?([ex])(\d+)$")


def _split_terms(text: str) -> list[str]:
    """Split on top-level ``+`` (signs stay attached to the following term)."""
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and cur.strip() and not cur.rstrip().endswith("*"):
            out.append(cur)
            cur = "" if ch == "+" else "-"
            continue
        cur += ch
    if cur.strip():
        out.append(cur)
    return [t.strip() for t in out]


def _parse_sum(ctx: FieldCtx, n: int, text: str, lineno: int) -> np.ndarray:
    vec = np.zeros(n, dtype=np.uint8)
    text = text.strip()
    if text in ("", "0"):
        return vec
    for term in _split_terms(text):
        neg = term.startswith("-")
        body = term[1:].strip() if neg else term
        m = _TERM.match(body)
        if not m:
            raise FormatError(f"line {lineno}: cannot read term {term!r}")
        lit, _, k = m.groups()
        k = int(k)
        if not 1 <= k <= n:
            raise FormatError(f"line {lineno}: basis index {k} out of range 1..{n}")
        try:
            c = ctx.parse(lit) if lit else 1
        except FieldError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
        if neg:
            c = ctx.neg(c)
        vec[k - 1] = ctx.add(int(vec[k - 1]), c)
    return vec


def _parse_field(spec: str, lineno: int) -> FieldCtx:
    m = re.fullmatch(r"(\d+)(?:\^(\d+)\s+(.+))?", spec.strip())
    if not m:
        raise FormatError(f"line {lineno}: bad field spec {spec!r}")
    p, k, mod = m.groups()
    try:
        if k is None:
            return ff_make(int(p))
        return ff_make(int(p), int(k), mod.replace(" ", ""))
    except FieldError as exc:
        raise FormatError(f"line {lineno}: {exc}") from None


def _read(text: str, key_re, product: bool):
    ctx = n = None
    entries: dict[tuple[int, int], np.ndarray] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("field"):
            if ctx is not None:
                raise FormatError(f"line {lineno}: field given twice")
            ctx = _parse_field(line[5:], lineno)
            continue
        if line.startswith("dim"):
            if n is not None:
                raise FormatError(f"line {lineno}: dim given twice")
            try:
                n = int(line[3:])
            except ValueError:
                raise FormatError(f"line {lineno}: bad dimension") from None
            if n < 0:
                raise FormatError(f"line {lineno}: negative dimension")
            continue
        m = key_re.match(line)
        if not m:
            raise FormatError(f"line {lineno}: cannot parse {raw.strip()!r}")
        if ctx is None or n is None:
            raise FormatError(f"line {lineno}: 'field' and 'dim' must precede entries")
        i, j = int(m.group(1)), int(m.group(2))
        if not (1 <= i <= n and 1 <= j <= n):
            raise FormatError(f"line {lineno}: index out of range 1..{n}")
        if (i > j) if product else (i >= j):
            rel = "i <= j" if product else "i < j"
            raise FormatError(f"line {lineno}: key ({i},{j}) violates {rel}")
        if (i, j) in entries:
            raise FormatError(f"line {lineno}: key ({i},{j}) given twice")
        entries[(i, j)] = _parse_sum(ctx, n, m.group(3), lineno)
    if ctx is None or n is None:
        raise FormatError("missing 'field' or 'dim' header")
    return ctx, n, {(i - 1, j - 1): v for (i, j), v in entries.items()}


def parse_lie(text: str) -> LieAlgebra:
    """Parse ``.lie`` text; the result must satisfy the Lie algebra axioms."""
    ctx, n, sc = _read(text, _KEY, product=False)
    g = LieAlgebra.from_brackets(ctx, n, sc)
    rep = validate(g)
    if not rep.ok:
        raise FormatError(f"not a Lie algebra: {rep.axiom} fails at basis triple {rep.triple}: {rep.message}")
    return g


def _format_sum(ctx: FieldCtx, vec) -> str:
    terms = []
    for k in np.flatnonzero(vec):
        c = int(vec[k])
        if c == 1:
            terms.append(f"e{k + 1}")
            continue
        lit = ctx.format(c)
        if ctx.k > 1 and any(ch in lit for ch in "+^"):
            lit = f"({lit})"
        terms.append(f"{lit}*e{k + 1}")
    return " + ".join(terms) if terms else "0"


def _header(ctx: FieldCtx, n: int) -> list[str]:
    return [f"field {ctx.spec()}", f"dim {n}"]


def print_lie(g: LieAlgebra) -> str:
    lines = _header(g.ctx, g.n)
    lines += [f"[{i + 1},{j + 1}] = {_format_sum(g.ctx, v)}" for (i, j), v in g.sc.items()]
    return "\n".join(lines) + "\n"


def parse_prod(text: str, g: LieAlgebra):
    from .cpa import SymProduct

    ctx, n, sc = _read(text, _PKEY, product=True)
    if ctx != g.ctx or n != g.n:
        raise FormatError("product file field/dim do not match the algebra")
    return SymProduct.from_products(g, sc)


def print_prod(P) -> str:
    lines = _header(P.ctx, P.base.n)
    lines += [f"e{i + 1}.e{j + 1} = {_format_sum(P.ctx, v)}" for (i, j), v in P.sc.items()]
    return "\n".join(lines) + "\n"


def load_algebra(source: str) -> LieAlgebra:
    """A ``.lie`` path, or ``builtin:<name>`` for a shipped table."""
    from .construct import BUILTINS, builtin

    if source.startswith("builtin:"):
        name = source.split(":", 1)[1]
        if name not in BUILTINS:
            raise FormatError(f"unknown builtin {name!r}; choose from {', '.join(sorted(BUILTINS))}")
        return builtin(name)
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise FormatError(str(exc)) from None
    return parse_lie(text)


# ---------------------------------------------------------------------------
# reporting


def _budget(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("MODLIE_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise FormatError(f"MODLIE_BUDGET={env!r} is not an integer") from None
    return DEFAULT_NODE_BUDGET


def _jsonable(x):
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


class Report:
    def __init__(self, g: LieAlgebra | None, as_json: bool):
        self.g = g
        self.as_json = as_json
        self.lines: list[str] = []
        self.result: dict = {}
        self.budgets: dict = {}
        self.complete = True

    def say(self, line: str):
        self.lines.append(line)

    def finish(self) -> int:
        elapsed = time.perf_counter() - _clock["t0"]
        if self.as_json:
            doc = {
                "algebra": {"dim": self.g.n, "field": self.g.ctx.spec()} if self.g is not None else None,
                "result": self.result,
                "timings": {"total_s": round(elapsed, 6)},
                "budgets": self.budgets,
                "complete": self.complete,
            }
            click.echo(json.dumps(_jsonable(doc), sort_keys=True))
        else:
            for line in self.lines:
                click.echo(line)
            if self.budgets:
                b = ", ".join(f"{k}={v}" for k, v in self.budgets.items())
                click.echo(f"budget: {b}; complete: {'yes' if self.complete else 'no'}")
        return EXIT_OK if self.complete else EXIT_BUDGET


_clock = {"t0": 0.0}


def _run(fn):
    """Map library exceptions onto exit codes."""
    from .construct import ConstructError

    _clock["t0"] = time.perf_counter()
    try:
        code = fn()
    except (FormatError, FieldError, LieError, ConstructError, click.BadParameter) as exc:
        click.echo(f"error: {exc}", err=True)
        code = EXIT_INPUT
    except BudgetExceeded as exc:
        click.echo(f"budget exceeded: {exc}", err=True)
        code = EXIT_BUDGET
    except (AssertionError, RuntimeError) as exc:
        click.echo(f"internal invariant failure: {exc}", err=True)
        code = EXIT_INTERNAL
    sys.exit(code)


json_opt = click.option("--json", "as_json", is_flag=True, help="Emit a JSON report.")
budget_opt = click.option("--budget", type=int, default=None,
                          help="Solver node budget (default: $MODLIE_BUDGET or 10^7).")


@click.group()
@click.option("--threads", type=int, default=1, show_default=True,
              help="Worker cap; the current kernels are single-threaded.")
@click.version_option(package_name="artifact")
def main(threads):
    """Structure computations for Lie algebras over finite fields."""
    if threads < 1:
        raise click.BadParameter("--threads must be >= 1")


@main.command("validate")
@click.argument("source")
@json_opt
def validate_cmd(source, as_json):
    """Check the alternating and Jacobi identities."""

    def go():
        from .construct import BUILTINS, builtin

        if source.startswith("builtin:") and source.split(":", 1)[1] in BUILTINS:
            g = builtin(source.split(":", 1)[1])
        else:
            try:
                text = Path(source).read_text()
            except OSError as exc:
                raise FormatError(str(exc)) from None
            ctx, n, sc = _read(text, _KEY, product=False)
            g = LieAlgebra.from_brackets(ctx, n, sc)
        rep = validate(g)
        r = Report(g, as_json)
        r.result = {"valid": rep.ok, "axiom": rep.axiom, "witness": rep.triple, "message": rep.message}
        r.say(f"valid: dim {g.n} over F_{g.ctx.q}" if rep.ok else f"invalid: {rep.axiom} ({rep.message})")
        code = r.finish()
        return code if rep.ok else EXIT_INPUT

    _run(go)


@main.command()
@click.argument("source")
@json_opt
def info(source, as_json):
    """Dimension, field, centre, perfectness and simplicity."""

    def go():
        g = load_algebra(source)
        r = Report(g, as_json)
        z = center(g).dim
        perf = is_perfect(g)
        ds = series(g, "derived")
        sv = is_simple(g)
        r.result = {"center_dim": z, "perfect": perf, "derived_dims": ds.dims,
                    "simple": sv.tag, "simple_method": sv.method, "certificate": g.certificate}
        r.say(f"dim {g.n} over F_{g.ctx.q} (field {g.ctx.spec()})")
        r.say(f"centre dim {z}; perfect: {'yes' if perf else 'no'}")
        r.say(f"derived series dims: {ds.dims}")
        r.say(f"simple: {sv.tag} (method: {sv.method})")
        r.complete = sv.tag != "Unknown"
        return r.finish()

    _run(go)


@main.command("series")
@click.argument("source")
@click.option("--kind", type=click.Choice(["derived", "lower-central"]), default="derived", show_default=True)
@json_opt
def series_cmd(source, kind, as_json):
    """Derived or lower central series dimensions."""

    def go():
        g = load_algebra(source)
        s = series(g, kind)
        r = Report(g, as_json)
        r.result = {"kind": kind, "dims": s.dims, "stabilized": s.stabilized, "length": s.length}
        r.say(f"{kind} series dims: {s.dims}")
        if s.length is not None:
            r.say(f"reaches 0 after {s.length} steps")
        else:
            r.say(f"stabilizes at dim {s.dims[-1]}")
        return r.finish()

    _run(go)


@main.command()
@click.argument("source")
@json_opt
def der(source, as_json):
    """Derivation, inner and outer derivation algebras."""
    from .derive import derivations, out_heisenberg_profile, out_solvability

    def go():
        g = load_algebra(source)
        d = derivations(g)
        s = out_solvability(d)
        r = Report(g, as_json)
        r.result = {"der_dim": d.dim_der, "inn_dim": d.dim_inn, "out_dim": d.dim_out,
                    "out_solvable": s.length is not None, "out_derived_dims": s.dims,
                    "out_derived_length": s.length}
        r.say(f"dim Der = {d.dim_der}, dim Inn = {d.dim_inn}, dim Out = {d.dim_out}")
        if s.length is None:
            r.say(f"Out is not solvable (derived dims {s.dims})")
        else:
            r.say(f"Out is solvable of derived length {s.length} (derived dims {s.dims})")
        if d.dim_out and s.length is not None and s.length >= 2:
            h = out_heisenberg_profile(d)
            r.result["out_derived_heisenberg"] = {"dim": h.dim, "class": h.nilpotency_class,
                                                  "center_dim": h.center_dim}
            r.say(f"Out^(1): dim {h.dim}, nilpotency class {h.nilpotency_class}, centre dim {h.center_dim}")
        return r.finish()

    _run(go)


@main.command("centroid")
@click.argument("source")
@json_opt
def centroid_cmd(source, as_json):
    """Centroid dimension and central simplicity."""
    from .derive import is_central_simple

    def go():
        g = load_algebra(source)
        cs = is_central_simple(g)
        r = Report(g, as_json)
        r.result = {"centroid_dim": cs.centroid_dim, "simple": cs.simple, "central_simple": cs.central_simple}
        r.say(f"centroid dim {cs.centroid_dim}; simple: {cs.simple}; "
              f"central simple: {'yes' if cs.central_simple else 'no'}")
        return r.finish()

    _run(go)


def _tag_word(tag: str) -> str:
    return {"Trivial": "trivial", "Adjoint": "adjoint", "InnerNontrivial": "inner", "Other": "other"}[tag]


@main.command()
@click.argument("source")
@click.option("--check", "check_path", type=click.Path(exists=True, dir_okay=False),
              help="Only test whether the product in this .prod file is a CPA structure.")
@click.option("--enlarged", is_flag=True, help="Raise the linear-stage limit to the enlarged profile.")
@click.option("--show", is_flag=True, help="Print each product.")
@budget_opt
@json_opt
def cpa(source, check_path, enlarged, show, budget, as_json):
    """Enumerate (or check) CPA structures."""
    from .cpa import DEFAULT_LINEAR_LIMIT, ENLARGED_LINEAR_LIMIT, cpa_all, classify, is_cpa

    def go():
        g = load_algebra(source)
        r = Report(g, as_json)
        if check_path:
            P = parse_prod(Path(check_path).read_text(), g)
            rep = is_cpa(g, P)
            tag = classify(g, P).tag if rep else None
            r.result = {"is_cpa": bool(rep), "failed_axiom": rep.axiom, "witness": rep.triple, "class": tag}
            r.say(f"CPA structure ({_tag_word(tag)})" if rep else f"not a CPA structure: {rep.message}")
            code = r.finish()
            return code if rep else EXIT_INPUT
        limit = ENLARGED_LINEAR_LIMIT if enlarged else DEFAULT_LINEAR_LIMIT
        b = _budget(budget)
        res = cpa_all(g, budget=b, linear_limit=limit)
        tags = [classify(g, P).tag for P in res.products]
        r.budgets = {"nodes": b, "linear_limit": limit}
        r.complete = res.complete
        r.result = {"count": len(res), "classes": [_tag_word(t) for t in tags], "linear_dim": res.linear_dim,
                    "nodes": res.nodes, "products": [P.sc for P in res.products]}
        words = ", ".join(_tag_word(t) for t in tags)
        r.say(f"{len(res)} CPA structure{'s' if len(res) != 1 else ''}: {words}")
        r.say(f"linear stage dim {res.linear_dim}; solver nodes {res.nodes}")
        if show:
            for k, P in enumerate(res.products, 1):
                r.say(f"-- product {k} ({_tag_word(tags[k - 1])})")
                r.lines.extend(print_prod(P).splitlines()[2:])
        return r.finish()

    _run(go)


@main.command()
@click.argument("source")
@click.option("--assert-out-iso", is_flag=True,
              help="Take g isomorphic to Out(g) as given when a section exists.")
@budget_opt
@json_opt
def taut(source, assert_out_iso, budget, as_json):
    """Decide tautness via the criteria chain and the split-section search."""
    from .taut import is_taut

    def go():
        g = load_algebra(source)
        b = _budget(budget)
        v = is_taut(g, budget=b, assert_out_iso=assert_out_iso)
        r = Report(g, as_json)
        r.budgets = {"nodes": b}
        r.complete = v.complete
        r.result = {"verdict": v.tag, "reason": v.reason, "nodes": v.nodes, "notes": v.notes}
        if v.witness is not None:
            r.result["section"] = v.witness["section"]
        text = {
            "OutZero": "Out = 0",
            "OutSolvablePerfect": "perfect with solvable Out",
            "OutSmallerSimple": "simple with dim Out < dim g",
            "NoSplitSection": "no split section; search complete",
            "SplitSectionFound": "split section found",
            "InsufficientCriteria": "criteria inconclusive",
        }[v.reason]
        r.say(f"{v.tag} ({text})")
        for note in v.notes:
            r.say(f"  {note}")
        return r.finish()

    _run(go)


@main.command()
@click.argument("kind", type=click.Choice(["gl", "sl", "psl", "witt", "hamiltonian", "builtin"]))
@click.argument("size", required=False)
@click.option("--field", "field_spec", default=None, help="Field, e.g. '5' or '2^2 t^2+t+1'.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
def make(kind, size, field_spec, output):
    """Write a constructed algebra as a .lie file.

    SIZE is the matrix size (gl, sl, psl), the number of variables (witt),
    or the table name for builtin.
    """
    from .construct import make as build

    def go():
        if kind == "builtin":
            if size is None:
                raise FormatError("builtin needs a table name")
            g = load_algebra(f"builtin:{size}")
        else:
            if field_spec is None:
                raise FormatError("--field is required")
            ctx = _parse_field(field_spec, 0)
            try:
                n = int(size) if size is not None else None
            except ValueError:
                raise FormatError(f"size {size!r} is not an integer") from None
            g = build(kind, n, ctx)
        text = print_lie(g)
        if output:
            Path(output).write_text(text)
        else:
            click.echo(text, nl=False)
        return EXIT_OK

    _run(go)


@main.command()
@click.argument("source")
@click.argument("prod_path", type=click.Path(exists=True, dir_okay=False))
@json_opt
def decompose(source, prod_path, as_json):
    """Eigenspace splitting g = n + h for an inner CPA structure x.y = [phi x, y]."""
    from .cpa import classify, eigen_decompose, is_cpa, nh_properties

    def go():
        g = load_algebra(source)
        P = parse_prod(Path(prod_path).read_text(), g)
        rep = is_cpa(g, P)
        if not rep:
            raise FormatError(f"not a CPA structure: {rep.axiom} fails")
        cl = classify(g, P)
        r = Report(g, as_json)
        if cl.phi is None:
            r.result = {"class": cl.tag, "notes": cl.notes}
            r.say(f"structure is {_tag_word(cl.tag)}; no phi to decompose ({'; '.join(cl.notes)})")
            return r.finish()
        E = eigen_decompose(g, cl.phi)
        nh = nh_properties(g, cl.phi, E)
        big = E.field
        eig = {big.format(a): s.dim for a, s in E.spaces.items()}
        r.result = {"class": cl.tag, "phi": cl.phi.data, "splitting_field": big.spec(), "eigenspaces": eig,
                    "n_dim": E.n.dim, "h_dim": E.h.dim, "properties": {
                        "componentwise": nh.componentwise, "n_inf_times_n_zero": nh.n_inf_times_n_zero,
                        "h_second_derived_zero": nh.h_second_derived_zero,
                        "h_adjoint_on_commutator": nh.h_adjoint_on_commutator}, "ok": nh.ok}
        r.say(f"structure is {_tag_word(cl.tag)}; eigenvalues over F_{big.q}: "
              + ", ".join(f"{a} (dim {d})" for a, d in eig.items()))
        r.say(f"dim n = {E.n.dim}, dim h = {E.h.dim}; properties hold: {'yes' if nh.ok else 'no'}")
        code = r.finish()
        return code if nh.ok else EXIT_INTERNAL

    _run(go)


if __name__ == "__main__":  # pragma: no cover
    main()
