"""Exact polynomial arithmetic: frozen instances plus ring laws."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pathforms.polyring import MismatchError, Poly, as_fraction

XY = ("x", "y")


def p(terms, variables=XY):
    return Poly(variables, terms)


def test_add_cancellation():
    x_plus_1 = p({(1, 0): 1, (0, 0): 1})
    x_minus_1 = p({(1, 0): 1, (0, 0): -1})
    assert x_plus_1 + x_minus_1 == p({(1, 0): 2})


def test_add_identity():
    q = p({(2, 1): Fraction(3, 2)})
    assert Poly.zero(XY) + q == q


def test_add_coefficients():
    assert p({(2, 1): 1}) + p({(2, 1): Fraction(3, 2)}) == p({(2, 1): Fraction(5, 2)})


def test_mul_difference_of_squares():
    x_plus_y = p({(1, 0): 1, (0, 1): 1})
    x_minus_y = p({(1, 0): 1, (0, 1): -1})
    assert x_plus_y * x_minus_y == p({(2, 0): 1, (0, 2): -1})


def test_mul_identities():
    q = p({(1, 1): Fraction(7, 3), (0, 0): -2})
    assert Poly.const(XY, 1) * q == q
    assert Poly.zero(XY) * q == Poly.zero(XY)


def test_pderiv():
    assert p({(2, 1): 1}).pderiv("x") == p({(1, 1): 2})
    assert Poly.const(XY, 5).pderiv("x") == Poly.zero(XY)
    assert p({(2, 0): 1, (0, 3): 1}).pderiv("y") == p({(0, 2): 3})


def test_compose():
    tu = ("t", "u")
    x_sq = Poly(("x",), {(2,): 1})
    t_times_u = Poly(tu, {(1, 1): 1})
    assert x_sq.compose({"x": t_times_u}) == Poly(tu, {(2, 2): 1})

    q = p({(1, 2): Fraction(1, 2), (0, 0): 3})
    identity = {"x": Poly.var(XY, "x"), "y": Poly.var(XY, "y")}
    assert q.compose(identity) == q

    x_plus_y = p({(1, 0): 1, (0, 1): 1})
    zeros = {"x": Poly.zero(XY), "y": Poly.zero(XY)}
    assert x_plus_y.compose(zeros) == Poly.zero(XY)


def test_compose_empty_source_needs_target():
    c = Poly((), {(): Fraction(4)})
    assert c.compose({}, variables=XY) == Poly.const(XY, 4)


def test_defint01():
    tu = ("t", "u")
    assert Poly(tu, {(2, 0): 1}).defint01("t") == Poly.const(tu, Fraction(1, 3))
    assert Poly(tu, {(0, 1): 1}).defint01("t") == Poly(tu, {(0, 1): 1})
    assert Poly(tu, {(1, 1): 2}).defint01("t") == Poly(tu, {(0, 1): 1})


def test_set_and_drop_var():
    tu = ("t", "u")
    q = Poly(tu, {(2, 1): 1, (0, 1): 1})
    frozen = q.set_var("t", 1)
    assert frozen == Poly(tu, {(0, 1): 2})
    assert frozen.drop_var("t") == Poly(("u",), {(1,): 2})
    with pytest.raises(ValueError):
        q.drop_var("t")


def test_variable_mismatch_is_an_error():
    with pytest.raises(MismatchError):
        p({(1, 0): 1}) + Poly(("x",), {(1,): 1})
    with pytest.raises(MismatchError):
        p({(1, 0): 1}) * Poly(("z", "y"), {(1, 0): 1})


def test_unknown_variable_errors():
    q = p({(1, 0): 1})
    with pytest.raises(ValueError):
        q.pderiv("z")
    with pytest.raises(ValueError):
        q.defint01("z")
    with pytest.raises(MismatchError):
        q.compose({"x": Poly.var(XY, "x")})  # no entry for y


def test_floats_rejected():
    with pytest.raises(TypeError):
        as_fraction(0.5)
    with pytest.raises(TypeError):
        p({(1, 0): 0.5})


def test_canonical_form():
    assert p({(1, 0): 0}) == Poly.zero(XY)
    assert p({(1, 0): 1, (0, 0): 0}).terms == {(1, 0): Fraction(1)}


coeffs = st.fractions(
    min_value=-4, max_value=4, max_denominator=4
)
exponents = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(exponents, coeffs, max_size=4).map(lambda t: Poly(XY, t))


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys)
def test_mixed_partials(a):
    assert a.pderiv("x").pderiv("y") == a.pderiv("y").pderiv("x")


@given(polys)
def test_fundamental_theorem(a):
    # integrating d/dx over [0,1] telescopes to the endpoint difference
    lhs = a.pderiv("x").defint01("x")
    rhs = a.set_var("x", 1) - a.set_var("x", 0)
    assert lhs == rhs
