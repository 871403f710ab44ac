from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rinehart.parser import (PolynomialSyntaxError, UnknownVariableError,
                             parse_polynomial)
from rinehart.polyring import Polynomial, WeightedRing

NAMES = ["x", "y", "z"]


def parse(text):
    return parse_polynomial(text, NAMES)


def test_fermat_cubic():
    p = parse("x^3 + y^3 + z^3")
    assert p.terms == {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1}


def test_zero():
    assert parse("0").is_zero()


def test_leading_minus_and_products():
    p = parse("-y^2+y*z-z^2")
    assert p.terms == {(0, 2, 0): -1, (0, 1, 1): 1, (0, 0, 2): -1}


def test_rational_coefficients():
    p = parse("2/3*x - 1/2")
    assert p.terms == {(1, 0, 0): Fraction(2, 3), (0, 0, 0): Fraction(-1, 2)}


def test_parentheses_and_powers():
    p = parse("(x + y)^2")
    assert p == parse("x^2 + 2*x*y + y^2")


def test_constant_power():
    assert parse("2^3").terms == {(0, 0, 0): 8}


def test_negative_base_after_star():
    assert parse("2*-3").terms == {(0, 0, 0): -6}


def test_whitespace_insignificant():
    assert parse(" x ^ 2 +  y\t* z ") == parse("x^2+y*z")


@pytest.mark.parametrize("text", ["2x", "x y", "x*", "(x", "x^", "x^-2", "^2", "x++y"])
def test_syntax_errors(text):
    with pytest.raises(PolynomialSyntaxError):
        parse(text)


def test_error_carries_position():
    with pytest.raises(PolynomialSyntaxError) as info:
        parse("x + $")
    assert info.value.position == 4


def test_unknown_variable():
    with pytest.raises(UnknownVariableError):
        parse("x + w")


def test_zero_denominator():
    with pytest.raises(PolynomialSyntaxError):
        parse("1/0")


def test_cancellation_to_zero():
    assert parse("x - x").is_zero()


monomials = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
coefficients = st.fractions(min_value=-9, max_value=9, max_denominator=8)
polys = st.dictionaries(monomials, coefficients, max_size=6).map(
    lambda terms: Polynomial(3, terms))


@settings(max_examples=80, deadline=None)
@given(polys)
def test_printer_output_reparses_to_the_same_polynomial(p):
    ring = WeightedRing(NAMES, [1, 1, 1], "x^7 + y^7 + z^7")
    text = ring.poly_str(p)
    assert parse(text) == p
