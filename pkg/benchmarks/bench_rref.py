"""Compiled core vs numpy fallback on the kernels the library spends its time in.

    python benchmarks/bench_rref.py [--repeat 3]
"""

from __future__ import annotations

import time

import click
import numpy as np

from modlie import _backend
from modlie.construct import builtin, psl
from modlie.derive import derivation_system, derivations
from modlie.field import ff_make
from modlie.polysolve import solve_all
from modlie.taut import section_system


def _rref_case(ctx, M):
    def run():
        m = M.copy()
        _backend.rref_inplace(m, ctx)
    return run


def _cases():
    F3, F5 = ff_make(3), ff_make(5)
    rng = np.random.default_rng(7)
    yield "rref random 400x400 F3", _rref_case(F3, rng.integers(0, 3, (400, 400)).astype(np.uint8))
    yield "rref Der system psl(5,F5)", _rref_case(F5, derivation_system(psl(5, F5)))
    sys_ = section_system(derivations(builtin("psl3f3-table")))
    yield "section search psl3, 300 nodes", lambda: solve_all(sys_, budget=300)


@click.command()
@click.option("--repeat", default=3, show_default=True)
def main(repeat):
    try:
        _backend.use("cython")
    except ImportError:
        raise SystemExit("compiled core not built; run pip install -e . first")
    print(f"{'case':36s} {'cython s':>10s} {'numpy s':>10s} {'ratio':>7s}")
    for name, fn in _cases():
        best = {}
        for be in ("cython", "numpy"):
            _backend.use(be)
            ts = []
            for _ in range(repeat):
                t0 = time.perf_counter()
                fn()
                ts.append(time.perf_counter() - t0)
            best[be] = min(ts)
        print(f"{name:36s} {best['cython']:10.4f} {best['numpy']:10.4f} {best['numpy'] / best['cython']:7.1f}x")
    _backend.use("cython")


if __name__ == "__main__":
    main()
