"""Terminating generalized hypergeometric series.

Only terminating series are supported: some numerator parameter must be a
nonpositive integer ``-n``, and the sum runs over ``k = 0..n`` inclusive.
Equal numerator/denominator parameters are cancelled before summing, so a
family that deliberately pairs ``a`` on top with ``a`` below never trips
over a spurious ``0/0``.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import (
    DomainError,
    NonTerminatingError,
    PoleError,
    RationalLike,
    as_rational,
    is_nonpositive_integer,
    pochhammer,
)


@dataclass(frozen=True)
class HypSeries:
    """Parameters and argument of ``pFq[num; den; argument]``."""

    num_params: tuple[Fraction, ...]
    den_params: tuple[Fraction, ...]
    argument: Fraction | float = Fraction(1)

    def __init__(self, num_params, den_params, argument=Fraction(1)):
        object.__setattr__(self, "num_params", tuple(as_rational(a) for a in num_params))
        object.__setattr__(self, "den_params", tuple(as_rational(b) for b in den_params))
        if not isinstance(argument, float):
            argument = as_rational(argument)
        object.__setattr__(self, "argument", argument)

    def at(self, argument) -> "HypSeries":
        return HypSeries(self.num_params, self.den_params, argument)

    def evaluate(self):
        if isinstance(self.argument, float):
            return pfq_real(self.num_params, self.den_params, self.argument)
        return pfq_exact(self.num_params, self.den_params, self.argument)


def param_set(k: int, c: RationalLike) -> list[Fraction]:
    """The k-element block ``c/k, (c+1)/k, ..., (c+k-1)/k``."""
    if k <= 0:
        raise DomainError(f"parameter block size must be positive, got {k}")
    c = as_rational(c)
    return [(c + i) / k for i in range(k)]


def termination_index(num_params: Sequence[RationalLike]) -> int:
    """Smallest ``n`` over numerator parameters equal to ``-n``."""
    witnesses = [-a.numerator for a in map(as_rational, num_params) if is_nonpositive_integer(a)]
    if not witnesses:
        raise NonTerminatingError(f"no nonpositive-integer numerator in {list(num_params)}")
    return min(witnesses)


def cancel_params(num_params, den_params) -> tuple[list[Fraction], list[Fraction]]:
    """Remove parameters common to both lists (as multisets)."""
    top = Counter(map(as_rational, num_params))
    bottom = Counter(map(as_rational, den_params))
    common = top & bottom
    top -= common
    bottom -= common
    return sorted(top.elements()), sorted(bottom.elements())


def _prepare(num_params, den_params) -> tuple[list[Fraction], list[Fraction], int]:
    # the sum length is fixed before cancellation: a cancelled (-m, -m) pair
    # still truncates the series at k = m
    n = termination_index(num_params)
    top, bottom = cancel_params(num_params, den_params)
    if any(is_nonpositive_integer(a) for a in top):
        n = min(n, termination_index(top))
    for b in bottom:
        if is_nonpositive_integer(b) and -b.numerator < n:
            raise PoleError(
                f"denominator parameter {b} vanishes before the series terminates at k={n}"
            )
    return top, bottom, n


def series_coefficients(num_params, den_params) -> list[Fraction]:
    """Exact coefficients ``c_k = prod (a)_k / prod (b)_k / k!`` for k = 0..n."""
    top, bottom, n = _prepare(num_params, den_params)
    # common-denominator integers keep the ratio recurrence in int arithmetic
    tp = [(a.numerator, a.denominator) for a in top]
    bp = [(b.numerator, b.denominator) for b in bottom]
    coeffs = [Fraction(1)]
    num, den = 1, 1
    for k in range(n):
        for p, q in tp:
            num *= p + k * q
            den *= q
        for p, q in bp:
            den *= p + k * q
            num *= q
        den *= k + 1
        coeffs.append(Fraction(num, den))
        num, den = coeffs[-1].numerator, coeffs[-1].denominator
    return coeffs


def pfq_exact(num_params, den_params, x: RationalLike) -> Fraction:
    """Exact value of a terminating ``pFq`` at a rational argument."""
    x = as_rational(x)
    total = Fraction(0)
    power = Fraction(1)
    for c in series_coefficients(num_params, den_params):
        total += c * power
        power *= x
    return total


def pfq_real(num_params, den_params, x: float) -> float:
    """Float value of a terminating ``pFq`` at a float argument.

    Horner runs on the exact binary value of ``x`` and rounds once, so the
    result is correctly rounded for the given double even when the
    alternating coefficients cancel heavily (e.g. unit argument).
    """
    if not math.isfinite(x):
        raise DomainError(f"non-finite argument {x}")
    xr = Fraction(float(x))
    acc = Fraction(0)
    for c in reversed(series_coefficients(num_params, den_params)):
        acc = acc * xr + c
    return float(acc)


# ---------------------------------------------------------------------------
# unit-argument 3F2 transformations

def _params_3f2(n, alpha, beta, gamma, delta):
    if n < 0:
        raise DomainError(f"series length must be nonnegative, got {n}")
    alpha, beta, gamma, delta = (as_rational(v) for v in (alpha, beta, gamma, delta))
    # the transforms are identities between length-n series; an early -m in
    # alpha or beta does not excuse a vanishing (gamma)_n or (delta)_n
    for name, b in (("gamma", gamma), ("delta", delta)):
        if pochhammer(b, n) == 0:
            raise PoleError(f"({name})_n vanishes for {name}={b}, n={n}")
    return alpha, beta, gamma, delta


def weber_erdelyi_first(n: int, alpha, beta, gamma, delta) -> tuple[Fraction, HypSeries]:
    """``3F2[-n, a, b; c, d; 1] = (c-a)_n/(c)_n * 3F2[-n, a, d-b; 1+a-c-n, d; 1]``.

    Returns the prefactor and the transformed series.
    """
    alpha, beta, gamma, delta = _params_3f2(n, alpha, beta, gamma, delta)
    prefactor = pochhammer(gamma - alpha, n) / pochhammer(gamma, n)
    return prefactor, HypSeries([-n, alpha, delta - beta], [1 + alpha - gamma - n, delta], 1)


def weber_erdelyi_second(n: int, alpha, beta, gamma, delta) -> tuple[Fraction, HypSeries]:
    """``3F2[-n, a, b; c, d; 1]`` as ``(c-a)_n (d-a)_n / ((c)_n (d)_n)`` times
    ``3F2[-n, a, a+b-c-d-n+1; 1+a-d-n, 1+a-c-n; 1]``."""
    alpha, beta, gamma, delta = _params_3f2(n, alpha, beta, gamma, delta)
    den = pochhammer(gamma, n) * pochhammer(delta, n)
    prefactor = pochhammer(gamma - alpha, n) * pochhammer(delta - alpha, n) / den
    third = alpha + beta - gamma - delta - n + 1
    return prefactor, HypSeries(
        [-n, alpha, third], [1 + alpha - delta - n, 1 + alpha - gamma - n], 1
    )


def weber_erdelyi_second_as_printed(n: int, alpha, beta, gamma, delta) -> tuple[Fraction, HypSeries]:
    """Second transformation with the literal third numerator ``gamma-delta-n``.

    Kept only so the harness can demonstrate that this parameter choice does
    not preserve the series value.
    """
    prefactor, series = weber_erdelyi_second(n, alpha, beta, gamma, delta)
    alpha, beta, gamma, delta = _params_3f2(n, alpha, beta, gamma, delta)
    return prefactor, HypSeries([-n, alpha, gamma - delta - n], series.den_params, 1)
