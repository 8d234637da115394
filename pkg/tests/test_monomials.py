import pytest
from hypothesis import given, strategies as st

from involutive.monomials import (ContextMismatch, MonomialParseError, Order, VariableContext,
                                  compare, divides, lcm, multiply, quotient)

exps = st.lists(st.integers(0, 6), min_size=3, max_size=3).map(tuple)
orders = st.sampled_from(list(Order))


def test_compare_examples(xyz):
    m = xyz.parse
    assert compare(Order.LEX, m("x^2*y"), m("x*z")) == 1
    assert compare(Order.DEGREVLEX, m("x*z"), m("y^2")) == -1
    for order in Order:
        assert compare(order, m("x*y"), m("x*y")) == 0


def test_degrevlex_pinned_direction(xyz):
    m = xyz.parse
    key = Order.DEGREVLEX.key
    assert key(m("x^2*y")) > key(m("x*y^2")) > key(m("x*z"))


def test_variable_convention(xyz):
    x, y, z = (xyz.variable(name) for name in "xyz")
    for order in Order:
        assert compare(order, x, y) == 1 and compare(order, y, z) == 1


def test_lcm_divides_quotient(xyz):
    m = xyz.parse
    assert lcm(m("x^2*y"), m("x*z")) == m("x^2*y*z")
    assert lcm(m("x*z"), xyz.one()) == m("x*z")
    assert divides(m("x*z"), m("x^2*y*z"))
    assert quotient(m("x^2*y*z"), m("x*z")) == m("x*y")
    assert not divides(m("y^2"), m("x*z"))
    assert divides(xyz.one(), m("z^7"))
    with pytest.raises(ValueError):
        quotient(m("x*z"), m("y^2"))


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        compare(Order.LEX, (1, 0), (1, 0, 0))
    with pytest.raises(ContextMismatch):
        lcm((1,), (0, 1))


def test_overflow_is_checked():
    with pytest.raises(OverflowError):
        multiply((2**62, 0), (2**62, 0))


@given(orders, exps, exps, exps)
def test_admissible(order, u, v, w):
    if u != (0, 0, 0):
        assert compare(order, (0, 0, 0), u) == -1
    if compare(order, u, v) == -1:
        assert compare(order, multiply(u, w), multiply(v, w)) == -1


@given(orders, exps, exps, exps)
def test_total_order(order, u, v, w):
    assert compare(order, u, v) == -compare(order, v, u)
    assert (compare(order, u, v) == 0) == (u == v)
    if compare(order, u, v) <= 0 and compare(order, v, w) <= 0:
        assert compare(order, u, w) <= 0


@given(exps, exps)
def test_divides_iff_lcm(u, w):
    assert divides(u, w) == (lcm(u, w) == w)


@given(exps)
def test_render_parse_round_trip(u):
    ctx = VariableContext(["x", "y", "z"])
    assert ctx.parse(ctx.render(u)) == u


def test_parse(xyz):
    assert xyz.parse("1") == (0, 0, 0)
    assert xyz.parse("x * y^2 * x") == (2, 2, 0)
    assert xyz.render((0, 0, 0)) == "1"
    assert xyz.render((2, 1, 0)) == "x^2*y"


@pytest.mark.parametrize("text", ["", "w", "x^", "x y", "x**2", "2*x"])
def test_parse_errors(xyz, text):
    with pytest.raises(MonomialParseError):
        xyz.parse(text)


def test_context_validation():
    with pytest.raises(ValueError):
        VariableContext([])
    with pytest.raises(ValueError):
        VariableContext(["x", "x"])
