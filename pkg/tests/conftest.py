from __future__ import annotations

import pytest

from modlie.construct import builtin, hamiltonian_p2, jacobson_witt, psl, sl
from modlie.field import ff_make
from modlie.lie import extend_scalars


@pytest.fixture(scope="session")
def F2():
    return ff_make(2)


@pytest.fixture(scope="session")
def F3():
    return ff_make(3)


@pytest.fixture(scope="session")
def F4():
    return ff_make(2, 2, "t^2+t+1")


@pytest.fixture(scope="session")
def F5():
    return ff_make(5)


@pytest.fixture(scope="session")
def psl3():
    return psl(3, ff_make(3))


@pytest.fixture(scope="session")
def psl3_table():
    return builtin("psl3f3-table")


@pytest.fixture(scope="session")
def w3():
    return builtin("w3")


@pytest.fixture(scope="session")
def g6():
    return builtin("g6")


@pytest.fixture(scope="session")
def g6_f4():
    return extend_scalars(builtin("g6"), 2)


@pytest.fixture(scope="session")
def sl2_f5():
    return sl(2, ff_make(5))


@pytest.fixture(scope="session")
def witt1_f5():
    return jacobson_witt(1, ff_make(5))


@pytest.fixture(scope="session")
def h5():
    return hamiltonian_p2(ff_make(5))
