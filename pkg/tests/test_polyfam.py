import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from celine.hypergeom import pfq_exact
from celine.exact import DomainError, PoleError, UnsupportedRegimeError, factorial, pochhammer
from celine.polyfam import (
    ahmad_A,
    celine_f,
    chebyshev_u,
    gegenbauer,
    hahn,
    jacobi,
    jacobi_real,
    jain_J,
    khan_f,
    rice_H,
    shah_F,
)

from conftest import rationals

GRID_X = [F(0), F(1, 4), F(1, 2), F(-1, 3), F(2, 5), F(1), F(3, 7), F(-2), F(5, 3), F(1, 9)]


def jacobi_explicit(n, a, b, x):
    """Sum over s of binom(n+a, n-s) binom(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s)."""
    def binom(top, k):
        return pochhammer(top - k + 1, k) / factorial(k)
    return sum(
        binom(n + a, n - s) * binom(n + b, s) * ((x - 1) / 2) ** s * ((x + 1) / 2) ** (n - s)
        for s in range(n + 1)
    )


def test_jacobi_examples():
    assert jacobi(0, F(5, 2), 7, F(3, 11)) == 1
    assert jacobi(2, 1, 1, 1) == 3
    assert jacobi(1, 0, 0, F(1, 3)) == F(1, 3)


@given(st.integers(0, 8), rationals().filter(lambda a: a > -1), rationals(), rationals())
def test_jacobi_matches_explicit_sum(n, a, b, x):
    assert jacobi(n, a, b, x) == jacobi_explicit(n, a, b, x)


def test_jacobi_pole():
    with pytest.raises(DomainError):
        jacobi(3, -2, 0, F(1, 2))


def test_jacobi_real_examples():
    assert jacobi_real(0, 1, 1, 0.7) == 1.0
    assert jacobi_real(1, 0, 0, 0.25) == 0.25
    c = math.cos(math.pi / 5)
    expected = float(pochhammer(F(3, 2), 3) / factorial(4)) * (8 * c**3 - 4 * c)
    assert jacobi_real(3, F(1, 2), F(1, 2), c) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("x", [F(1, 2), F(-3, 4), F(2, 5)])
def test_jacobi_real_matches_exact(x):
    for n in range(12):
        want = float(jacobi(n, F(1, 3), 2, x))
        assert jacobi_real(n, F(1, 3), 2, float(x)) == pytest.approx(want, rel=1e-13, abs=1e-15)


def test_hahn_examples():
    assert hahn(0, 3, 1, 2, 5) == 1
    assert hahn(4, 0, 1, 2, 5) == 1
    assert hahn(1, 1, 0, 0, 3) == F(1, 3)
    with pytest.raises(DomainError):
        hahn(4, 1, 0, 0, 3)


def test_hahn_pole():
    # 1+alpha = -1 vanishes before the -n witness; -N never can once n <= N
    with pytest.raises(PoleError):
        hahn(2, F(1, 2), -2, 0, 3)


def test_chebyshev_gegenbauer():
    assert chebyshev_u(0, 0.3) == 1.0 and gegenbauer(0, F(5, 2), 0.3) == 1.0
    assert chebyshev_u(1, 0.5) == 1.0
    assert gegenbauer(2, 1, 0.5) == chebyshev_u(2, 0.5) == 0.0
    for n in range(10):
        assert gegenbauer(n, 1, 0.37) == pytest.approx(chebyshev_u(n, 0.37), abs=1e-14)
    assert chebyshev_u(5, math.cos(0.4)) == pytest.approx(math.sin(6 * 0.4) / math.sin(0.4), abs=1e-13)


def test_celine_examples():
    assert celine_f([F(3)], [F(5)], F(7, 2), 0) == 1
    assert celine_f([], [], F(1, 4), 1) == 0


@pytest.mark.parametrize("x", GRID_X)
@pytest.mark.parametrize("n", [1, 2, 5])
def test_jain_recovers_celine(n, x):
    assert jain_J(1, 2, [], [], x, n) == celine_f([], [], x, n)
    assert jain_J(1, 2, [F(1, 3)], [F(7, 2)], x, n) == celine_f([F(1, 3)], [F(7, 2)], x, n)


def test_jain_examples():
    assert jain_J(F(2, 3), 3, [1], [2], F(1, 5), 0) == 1
    a, b, x, n = F(1), F(0), F(1, 3), 2
    lhs = jain_J(1 + a + b, 2, [(a + b + 1) / 2, (a + b) / 2 + 1], [1 + a], x, n)
    assert lhs == pochhammer(1 + a + b, n) / pochhammer(1 + a, n) * jacobi(n, a, b, 1 - 2 * x)


def test_jain_k1_passes_argument_through():
    # k = 1: empty block, scale 0**0 = 1
    expected = pochhammer(F(3, 2), 3) / 6 * pfq_exact([-3, 2], [F(3, 2)], F(1, 4))
    assert jain_J(F(3, 2), 1, [F(2)], [], F(1, 4), 3) == expected


def test_shah_examples():
    assert shah_F(1, 1, 1, [], [], F(1, 2), 0) == 1
    a, b, n, x = F(0), F(1), 2, F(1, 2)
    lhs = shah_F(1, 1, 1, [n + a + b + 1], [1 + a], x, n)
    assert lhs == factorial(n) / pochhammer(1 + a, n) * jacobi(n, a, b, 1 - 2 * x)
    a, b, xi, p, x, n = F(0), F(0), F(2), F(3), F(1, 4), 2
    lhs = shah_F(1, 1, 1, [n + a + b + 1, xi], [1 + a, p], x, n)
    assert lhs == factorial(n) / pochhammer(1 + a, n) * rice_H(n, a, b, xi, p, x)


@pytest.mark.parametrize("n", range(0, 9))
def test_shah_block_ends_at_m_minus_one(n):
    # x^n 2F1[-n/2, (1-n)/2; 1/2; x^2] is the even part of (x + x^2)^n
    x = F(2, 3)
    assert shah_F(2, 1, 2, [], [F(1, 2)], x, n) == ((x + x * x) ** n + (x - x * x) ** n) / 2


def test_shah_unsupported_regime():
    with pytest.raises(UnsupportedRegimeError):
        shah_F(1, 1, F(1, 2), [], [], F(1, 4), 2)


def test_khan_examples():
    assert khan_f(2, 3, 5, [], [], F(1, 3), 0) == 1
    a, b, n, x = F(1, 2), F(3, 2), 3, F(-1, 3)
    lhs = khan_f(1, 1 + a + b, 1 + 2 * a, [a + F(1, 2)], [], (1 - x) / 2, n)
    assert lhs == factorial(n) / pochhammer(1 + a, n) * jacobi(n, a, b, x)
    a, b, xi, p, v, n = F(0), F(1), F(3, 2), F(5, 2), F(1, 5), 2
    lhs = khan_f(1, 1 + a + b, 1 + 2 * a, [a + F(1, 2), xi], [p], v, n)
    assert lhs == factorial(n) / pochhammer(1 + a, n) * rice_H(n, a, b, xi, p, v)


def test_khan_cancels_half_integer_pair():
    # alpha = -1/2: the block Delta(2, 0) = [0, 1/2] would give a 0 downstairs
    value = khan_f(1, F(1, 2), 0, [0], [], F(1, 3), 2)
    assert value == 1


def test_rice_examples():
    assert rice_H(0, 1, 2, 3, 4, F(1, 2)) == 1
    assert rice_H(1, 0, 0, 1, 2, F(1, 2)) == F(1, 2)


@pytest.mark.parametrize("v", GRID_X)
def test_rice_reduces_to_jacobi(v):
    assert rice_H(3, F(1, 2), 2, F(7, 3), F(7, 3), v) == jacobi(3, F(1, 2), 2, 1 - 2 * v)


def test_ahmad_examples():
    assert ahmad_A(1, 2, [], [], F(1, 3), 0) == 1
    assert ahmad_A(0, 0, [], [], F(1, 2), 1) == -1


@pytest.mark.parametrize("x", GRID_X)
@pytest.mark.parametrize("n", [1, 3])
def test_ahmad_against_celine(n, x):
    # alpha = beta = 0: (1)_n/n! = 1 and n+1 is Celine's second parameter
    assert ahmad_A(0, 0, [F(3, 2)], [F(5, 4)], x, n) == celine_f([F(3, 2)], [F(5, 4)], x, n)
