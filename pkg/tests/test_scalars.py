"""Scalar field arithmetic and the string grammar."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dualcore.errors import ParseError
from dualcore.scalars import (
    GaussianRationalField,
    PrimeField,
    RationalField,
    field_from_tag,
)

Q = RationalField()
QI = GaussianRationalField()
F5 = PrimeField(5)

fractions = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)
gaussians = st.tuples(fractions, fractions)


def test_rational_parse_and_fmt():
    assert Q.parse("3/4") == Fraction(3, 4)
    assert Q.parse("-7") == Fraction(-7)
    assert Q.fmt(Fraction(10, 4)) == "5/2"
    assert Q.fmt(Fraction(-3)) == "-3"


def test_rational_rejects_zero_denominator():
    with pytest.raises(ParseError):
        Q.parse("1/0")


@pytest.mark.parametrize("bad", ["", "x", "1/2/3", "1.5"])
def test_rational_rejects_garbage(bad):
    with pytest.raises(ParseError):
        Q.parse(bad)


@pytest.mark.parametrize(
    "s,expect",
    [
        ("1+2i", (Fraction(1), Fraction(2))),
        ("1-2i", (Fraction(1), Fraction(-2))),
        ("3i", (Fraction(0), Fraction(3))),
        ("i", (Fraction(0), Fraction(1))),
        ("-i", (Fraction(0), Fraction(-1))),
        ("-1/2+3/4i", (Fraction(-1, 2), Fraction(3, 4))),
        ("5", (Fraction(5), Fraction(0))),
    ],
)
def test_gaussian_parse(s, expect):
    assert QI.parse(s) == expect


@given(gaussians)
def test_gaussian_fmt_round_trip(x):
    assert QI.parse(QI.fmt(x)) == x


@given(gaussians, gaussians)
def test_gaussian_conj_is_ring_involution(x, y):
    assert QI.conj(QI.conj(x)) == x
    assert QI.conj(QI.mul(x, y)) == QI.mul(QI.conj(x), QI.conj(y))
    assert QI.conj(QI.add(x, y)) == QI.add(QI.conj(x), QI.conj(y))


@given(gaussians)
def test_gaussian_inverse(x):
    if QI.is_zero(x):
        with pytest.raises(ZeroDivisionError):
            QI.inv(x)
    else:
        assert QI.mul(x, QI.inv(x)) == QI.one


def test_prime_field_basics():
    assert F5.parse("7") == 2
    assert F5.fmt(4) == "4"
    for x in range(1, 5):
        assert F5.mul(x, F5.inv(x)) == 1
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)


def test_prime_field_rejects_composite():
    with pytest.raises(ParseError):
        PrimeField(6)


def test_field_from_tag():
    assert field_from_tag("rationals") == Q
    assert field_from_tag("gaussian-rationals") == QI
    assert field_from_tag("gf(3)") == PrimeField(3)
    with pytest.raises(ParseError):
        field_from_tag("reals")


@given(fractions, fractions, fractions)
def test_rational_field_laws(x, y, z):
    assert Q.mul(x, Q.add(y, z)) == Q.add(Q.mul(x, y), Q.mul(x, z))
    assert Q.add(x, Q.neg(x)) == Q.zero
    assert Q.mul(x, Q.one) == x
