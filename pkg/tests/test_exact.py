import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from celine.exact import (
    DomainError,
    HalfInt,
    SqrtRational,
    double_factorial,
    factorial,
    format_rational,
    half_factorial,
    parse_halfint,
    parse_rational,
    parse_sqrt_rational,
    phase,
    pochhammer,
    proj_norm,
    sqrt_inv,
    sqrt_mul,
    sqrt_scale,
    triangle_delta,
)

from conftest import rationals, sqrt_rationals

S = SqrtRational


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (5, 120)])
def test_factorial(n, expected):
    assert factorial(n) == expected
    assert isinstance(factorial(n), F)


def test_factorial_negative():
    with pytest.raises(DomainError):
        factorial(-1)


@pytest.mark.parametrize("n, expected", [(-1, 1), (0, 1), (7, 105), (8, 384)])
def test_double_factorial(n, expected):
    assert double_factorial(n) == expected


def test_double_factorial_below_minus_one():
    with pytest.raises(DomainError):
        double_factorial(-2)


@pytest.mark.parametrize("a, k, expected", [(F(7, 3), 0, 1), (F(3, 2), 2, F(15, 4)), (-3, 5, 0), (-3, 3, -6)])
def test_pochhammer(a, k, expected):
    assert pochhammer(a, k) == expected


def test_pochhammer_rejects_float():
    with pytest.raises(TypeError):
        pochhammer(0.5, 2)


@given(rationals(), st.integers(0, 20), st.integers(0, 20))
def test_pochhammer_telescopes(a, j, k):
    assert pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + j, k)


@pytest.mark.parametrize("n", range(1, 31))
def test_double_factorial_product(n):
    assert double_factorial(n) * double_factorial(n - 1) == factorial(n)


def test_sqrt_mul_examples():
    assert sqrt_mul(S.sqrt(F(1, 2)), S.sqrt(F(1, 2))) == S.sqrt(F(1, 4))
    assert sqrt_mul(S.sqrt(F(2, 3)), -S.sqrt(F(3, 2))) == S(-1, F(1))
    assert sqrt_mul(S.zero(), S.sqrt(5)) == S.zero()


def test_sqrt_scale_examples():
    assert sqrt_scale(S.sqrt(2), -3) == S(-1, F(18))
    assert sqrt_scale(S.sqrt(F(5, 3)), 0) == S.zero()
    assert sqrt_scale(S(-1, F(7)), 1) == S(-1, F(7))


@settings(max_examples=100)
@given(sqrt_rationals(), sqrt_rationals(), sqrt_rationals())
def test_sqrt_mul_associative_commutative(x, y, z):
    assert sqrt_mul(x, y) == sqrt_mul(y, x)
    assert sqrt_mul(sqrt_mul(x, y), z) == sqrt_mul(x, sqrt_mul(y, z))


@settings(max_examples=100)
@given(sqrt_rationals(), rationals())
def test_sqrt_scale_square(x, r):
    assert sqrt_scale(x, r).square() == r * r * x.radicand


def test_sqrt_rational_invariants():
    with pytest.raises(DomainError):
        S(1, F(0))
    with pytest.raises(DomainError):
        S(0, F(2))
    with pytest.raises(DomainError):
        S(1, F(-1))
    assert S.from_rational(F(-2, 3)) == S(-1, F(4, 9))
    assert S.from_rational(F(-2, 3)).as_rational() == F(-2, 3)
    assert S.sqrt(2).as_rational() is None
    assert sqrt_inv(S(-1, F(2, 3))) == S(-1, F(3, 2))


def test_sqrt_rational_float_of_huge_radicand():
    x = S.sqrt(F(10**600 + 1, 7))
    assert math.isclose(float(x), 1e300 / math.sqrt(7), rel_tol=1e-12)


def test_halfint():
    assert HalfInt.of(F(1, 2)).twice == 1
    assert HalfInt.of(1).twice == 2
    assert str(HalfInt(3)) == "3/2"
    assert str(HalfInt(-4)) == "-2"
    assert HalfInt(3) + HalfInt(1) == HalfInt(4)
    with pytest.raises(DomainError):
        HalfInt.of(F(1, 3))
    with pytest.raises(TypeError):
        HalfInt.of(0.5)
    with pytest.raises(DomainError):
        HalfInt(3).as_int()


def test_phase_requires_integer_exponent():
    assert phase(4) == 1 and phase(2) == -1 and phase(-2) == -1
    with pytest.raises(AssertionError):
        phase(1)
    with pytest.raises(AssertionError):
        half_factorial(3)


def test_triangle_delta(H):
    assert triangle_delta(H(0), H(0), H(0)) == S.sqrt(1)
    assert triangle_delta(H(F(1, 2)), H(F(1, 2)), H(1)) == S.sqrt(F(1, 6))
    with pytest.raises(DomainError):
        triangle_delta(H(1), H(1), H(3))
    with pytest.raises(DomainError):
        triangle_delta(H(F(1, 2)), H(1), H(1))


def test_proj_norm(H):
    assert proj_norm([(H(0), H(0))]) == S.sqrt(1)
    assert proj_norm([(H(1), H(0)), (H(1), H(0))]) == S.sqrt(1)
    assert proj_norm([(H(1), H(1)), (H(F(1, 2)), H(F(-1, 2)))]) == S.sqrt(2)
    with pytest.raises(DomainError):
        proj_norm([(H(1), H(2))])
    with pytest.raises(DomainError):
        proj_norm([(H(1), H(F(1, 2)))])


def test_text_format():
    assert format_rational(F(0)) == "0"
    assert format_rational(F(-6, 4)) == "-3/2"
    assert str(S.zero()) == "0"
    assert str(S(-1, F(2, 15))) == "-sqrt(2/15)"
    assert str(S.sqrt(1)) == "sqrt(1)"
    assert parse_rational(" -3/6 ") == F(-1, 2)
    assert parse_halfint("5/2") == HalfInt(5)
    for bad in ("0.5", "1e3", "1/3x"):
        with pytest.raises(ValueError):
            parse_rational(bad)
    with pytest.raises(ValueError):
        parse_halfint("1/3")


@given(sqrt_rationals())
def test_sqrt_text_round_trip(x):
    assert parse_sqrt_rational(str(x)) == x
    assert str(parse_sqrt_rational(str(x))) == str(x)


@given(rationals(50, (1, 7, 12, 35)))
def test_rational_text_round_trip(r):
    assert parse_rational(format_rational(r)) == r
