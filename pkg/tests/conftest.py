import pytest

from involutive import Order, VariableContext
from involutive.polynomials import PolynomialRing

ACCEPTANCE_RESULTS = []


@pytest.fixture
def xyz():
    return VariableContext(["x", "y", "z"])


@pytest.fixture
def sample_set(xyz):
    return [xyz.parse(s) for s in ["x^2*y", "x*z", "y^2", "y*z", "z^3"]]


@pytest.fixture
def ring3():
    return PolynomialRing(VariableContext(["x", "y", "z"]), Order.DEGREVLEX)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {detail}")
