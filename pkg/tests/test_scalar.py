from fractions import Fraction

import pytest
from hypothesis import given

from structalg.scalar import RationalParseError, format_rational, parse_rational, rational_arith

from conftest import rationals

nonzero = rationals.filter(lambda x: x != 0)


def test_arith_examples():
    assert rational_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    assert rational_arith(Fraction(-3, 4), Fraction(-2, 3), "mul") == Fraction(1, 2)
    assert rational_arith(Fraction(1), Fraction(3), "sub") == -2
    assert rational_arith(Fraction(1), Fraction(3), "div") == Fraction(1, 3)


def test_canonical_construction():
    r = Fraction(2, 4)
    assert (r.numerator, r.denominator) == (1, 2)
    z = Fraction(0, -7)
    assert (z.numerator, z.denominator) == (0, 1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        rational_arith(Fraction(1), Fraction(0), "div")


def test_unknown_op():
    with pytest.raises(ValueError):
        rational_arith(Fraction(1), Fraction(1), "pow")


@pytest.mark.parametrize("text,value", [("-3/6", Fraction(-1, 2)), ("7", Fraction(7)), ("0", Fraction(0)),
                                        ("-0", Fraction(0)), ("12/8", Fraction(3, 2))])
def test_parse(text, value):
    assert parse_rational(text) == value


def test_format_integer_has_no_denominator():
    assert format_rational(parse_rational("7")) == "7"
    assert format_rational(Fraction(-1, 2)) == "-1/2"


@pytest.mark.parametrize("text,pos", [("1/0", 2), ("", 0), ("1.5", 1), ("--1", 1), ("+1", 0), ("1/", 2),
                                      ("1/05", 2), (" 1", 0), ("1/-2", 2), ("2/00", 2)])
def test_parse_errors(text, pos):
    with pytest.raises(RationalParseError) as exc:
        parse_rational(text)
    assert exc.value.position == pos


def test_zero_denominator_message():
    with pytest.raises(RationalParseError, match="zero denominator"):
        parse_rational("1/0")


@given(rationals)
def test_round_trip(r):
    assert parse_rational(format_rational(r)) == r


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    add = lambda x, y: rational_arith(x, y, "add")
    mul = lambda x, y: rational_arith(x, y, "mul")
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert add(a, rational_arith(0, a, "sub")) == 0


@given(nonzero)
def test_inverse(a):
    assert rational_arith(a, rational_arith(1, a, "div"), "mul") == 1


@given(rationals, rationals)
def test_results_canonical(a, b):
    for op in ("add", "sub", "mul"):
        r = rational_arith(a, b, op)
        assert r.denominator > 0
        from math import gcd
        assert gcd(abs(r.numerator), r.denominator) == 1
