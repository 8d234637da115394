import pytest
from hypothesis import assume, given, settings, strategies as st

from involutive.divisions import (Division, NotInSet, divides_with, find_involutive_divisor,
                                  involutive_divides, nonmultiplicative, pairwise_update,
                                  separation)
from involutive.monomials import Order, VariableContext

# multiplicative variables per division, reference table for the sample set
TABLE = {
    "x^2*y": ["x", "x,y,z", "y,z", "x", "x", "x", "x", "x"],
    "x*z": ["-", "y,z", "z", "x", "x,z", "x", "x,z", "x,z"],
    "y^2": ["y", "y,z", "y,z", "y", "y", "x,y", "x,y", "y"],
    "y*z": ["-", "z", "z", "-", "y,z", "x,y", "x,y,z", "x,y,z"],
    "z^3": ["z", "z", "z", "z", "z", "x,y,z", "z", "z"],
}
COLUMNS = [Division.THOMAS, Division.JANET, Division.POMMARET, Division.DIV1, Division.DIV2,
           Division.INDUCED_LEX, Division.INDUCED_DEGLEX, Division.INDUCED_DEGREVLEX]

monomial = st.lists(st.integers(0, 3), min_size=3, max_size=3).map(tuple)
monomial_sets = st.lists(monomial, min_size=1, max_size=6, unique=True)
divisions = st.sampled_from(list(Division))


def names(ctx, indices):
    return ctx.render_variables(indices)


@pytest.mark.parametrize("column", range(8))
def test_separation_table(xyz, sample_set, column):
    division = COLUMNS[column]
    for u in sample_set:
        got = names(xyz, separation(division, u, sample_set).multiplicative)
        assert got == TABLE[xyz.render(u)][column], (division, xyz.render(u))


def test_separation_examples(xyz, sample_set):
    m = xyz.parse
    assert names(xyz, separation(Division.JANET, m("x*z"), sample_set).multiplicative) == "y,z"
    assert names(xyz, separation(Division.INDUCED_DEGREVLEX, m("y*z"), sample_set).multiplicative) == "x,y,z"
    assert names(xyz, separation(Division.THOMAS, m("x^2*y"), sample_set).multiplicative) == "x"
    assert separation(Division.POMMARET, xyz.one(), [xyz.one()]).multiplicative == {0, 1, 2}


@pytest.mark.parametrize("division", [d for d in Division if not d.globally_defined])
def test_singleton_all_multiplicative(division):
    u = (2, 0, 1)
    assert separation(division, u, [u]).multiplicative == {0, 1, 2}


def test_not_in_set(sample_set):
    with pytest.raises(NotInSet):
        separation(Division.JANET, (5, 0, 0), sample_set)


def test_involutive_divides_examples(xyz, sample_set):
    m = xyz.parse
    assert involutive_divides(Division.JANET, m("x*z"), sample_set, m("x*y*z"))
    assert not involutive_divides(Division.JANET, m("y*z"), sample_set, m("x*y*z"))
    for division in Division:
        for u in sample_set:
            assert involutive_divides(division, u, sample_set, u)


def test_find_involutive_divisor(xyz, sample_set):
    m = xyz.parse
    assert find_involutive_divisor(Division.JANET, sample_set, m("x^2*y*z^3")) == m("x^2*y")
    assert find_involutive_divisor(Division.JANET, sample_set, m("x^5")) is None
    for u in sample_set:
        assert find_involutive_divisor(Division.JANET, sample_set, u) == u


def test_pairwise_update_examples(xyz):
    m = xyz.parse
    nm = pairwise_update(Division.THOMAS, m("x*z"), frozenset(), m("x^2*y"))
    assert names(xyz, nm) == "x,y"
    for division in Division:
        u = m("x*y^2")
        current = nonmultiplicative(division, u, [u])
        assert pairwise_update(division, u, current, u) == current


@given(divisions, monomial_sets, monomial)
def test_pairwise_matches_rescan(division, U, v):
    for u in U:
        nm = nonmultiplicative(division, u, U)
        assert pairwise_update(division, u, nm, v) == nonmultiplicative(division, u, U + [v])


@given(divisions, monomial_sets)
def test_partition(division, U):
    for u in U:
        sep = separation(division, u, U)
        assert sep.multiplicative | sep.nonmultiplicative == {0, 1, 2}
        assert not sep.multiplicative & sep.nonmultiplicative


@given(divisions, monomial_sets, st.data())
def test_axiom_d_subset(division, U, data):
    V = data.draw(st.lists(st.sampled_from(U), min_size=1, unique=True))
    for u in V:
        assert separation(division, u, U).multiplicative <= separation(division, u, V).multiplicative


@settings(max_examples=300)
@given(divisions, monomial_sets, st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_axiom_b_overlapping_cones(division, U, extra):
    nm = {u: nonmultiplicative(division, u, U) for u in U}
    for u in U:
        for v in U:
            if u == v:
                continue
            w = tuple(max(a, b) + e for a, b, e in zip(u, v, extra))
            if divides_with(nm[u], u, w) and divides_with(nm[v], v, w):
                assert divides_with(nm[v], v, u) or divides_with(nm[u], u, v)


@given(divisions, monomial_sets)
def test_axiom_c(division, U):
    for u in U:
        for v in U:
            if involutive_divides(division, u, U, v):
                assert separation(division, v, U).multiplicative <= separation(division, u, U).multiplicative


@given(monomial_sets)
def test_thomas_inclusions(U):
    for u in U:
        thomas = separation(Division.THOMAS, u, U).multiplicative
        for other in (Division.JANET, Division.DIV1, *(Division.induced(o) for o in Order)):
            assert thomas <= separation(other, u, U).multiplicative


@given(monomial_sets)
def test_pommaret_inside_janet_on_pommaret_autoreduced(U):
    nm = {u: nonmultiplicative(Division.POMMARET, u, U) for u in U}
    assume(not any(u != v and divides_with(nm[u], u, v) for u in U for v in U))
    for u in U:
        assert (separation(Division.POMMARET, u, U).multiplicative
                <= separation(Division.JANET, u, U).multiplicative)


@given(st.sampled_from([Division.POMMARET, Division.DIV2]), monomial_sets)
def test_globally_defined(division, U):
    for u in U:
        assert separation(division, u, U) == separation(division, u, [u])


def test_parse_names():
    assert Division.parse("Induced-DegRevLex") is Division.INDUCED_DEGREVLEX
    assert Division.induced(Order.LEX).inducing_order is Order.LEX
    with pytest.raises(ValueError):
        Division.parse("bogus")


def test_div1_bound_uses_ring_dimension():
    # n = 5 allows two-variable quotients, n = 3 does not
    ctx = VariableContext("x y z t w".split())
    U = [ctx.parse(s) for s in ["x*y^2*w^2", "x*z*t", "y*z*t"]]
    assert [ctx.render_variables(separation(Division.DIV1, u, U).multiplicative) for u in U] == \
        ["x,y,w", "x,z,t", "y,z,t,w"]
