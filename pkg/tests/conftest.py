import pytest

from engine.config import load_settings, set_settings
from engine.ring.core import ring_for
from engine.runtime import verify_status


@pytest.fixture(autouse=True)
def _fresh_settings():
    set_settings(load_settings())
    verify_status.reset()
    yield
    set_settings(load_settings())


@pytest.fixture
def z6():
    return ring_for("zn:6")


@pytest.fixture
def m2q():
    return ring_for("m2q")


@pytest.fixture
def m2f2():
    return ring_for("m2f2")


@pytest.fixture
def m2f5():
    return ring_for("m2f5")


@pytest.fixture
def a3(m2q):
    """The rational 2x2 example [[2,-2],[0,0]]."""
    return m2q.element([["2", "-2"], ["0", "0"]])


@pytest.fixture
def first_row_zero(m2f5):
    """Right ideal of M2(F5) with column space in span(e2): x11 = x12 = 0."""
    from engine.ideals.lattice import subspace_ideal

    return subspace_ideal(m2f5, "right", [["0", "1"]])
