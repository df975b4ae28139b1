"""Exact arithmetic substrate.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator, zero is ``0/1``).  Angular momenta are :class:`HalfInt`
twice-values so index arithmetic never leaves the integers, and coupling
coefficients are :class:`SqrtRational` values ``sign * sqrt(radicand)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]


class CelineError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(CelineError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """A denominator Pochhammer symbol or Gamma ratio vanishes in range."""


class NonTerminatingError(DomainError):
    """A hypergeometric series has no nonpositive-integer numerator."""


class UnsupportedRegimeError(DomainError):
    """The requested evaluation is not representable exactly."""


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floats are not accepted on exact paths")
    return Fraction(value)


def is_nonpositive_integer(a: Fraction) -> bool:
    return a.denominator == 1 and a.numerator <= 0


# ---------------------------------------------------------------------------
# factorial family

@lru_cache(maxsize=512)
def _int_factorial(n: int) -> int:
    return math.factorial(n)


def int_factorial(n: int) -> int:
    if n < 0:
        raise DomainError(f"factorial of negative integer {n}")
    return _int_factorial(n)


def factorial(n: int) -> Fraction:
    """``n!`` as an integer-valued Fraction."""
    return Fraction(int_factorial(n))


def double_factorial(n: int) -> Fraction:
    """``n!!`` with ``0!! = (-1)!! = 1``."""
    if n < -1:
        raise DomainError(f"double factorial undefined for {n}")
    out = 1
    for k in range(n, 0, -2):
        out *= k
    return Fraction(out)


def pochhammer(a: RationalLike, k: int) -> Fraction:
    """Rising factorial ``(a)_k = a (a+1) ... (a+k-1)``."""
    if k < 0:
        raise DomainError(f"Pochhammer length must be nonnegative, got {k}")
    a = as_rational(a)
    # work on a common denominator so the loop is integer-only
    p, q = a.numerator, a.denominator
    num = 1
    for i in range(k):
        num *= p + i * q
        if num == 0:
            return Fraction(0)
    return Fraction(num, q**k)


# ---------------------------------------------------------------------------
# half-integers

@dataclass(frozen=True, order=True)
class HalfInt:
    """Integer or half-odd-integer stored as its double."""

    twice: int

    @classmethod
    def of(cls, value: Union["HalfInt", int, Fraction, str]) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, bool) or isinstance(value, float):
            raise TypeError(f"cannot build HalfInt from {value!r}")
        if isinstance(value, int):
            return cls(2 * value)
        f = Fraction(value)
        if (2 * f).denominator != 1:
            raise DomainError(f"{value!r} is not a multiple of 1/2")
        return cls(int(2 * f))

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def as_int(self) -> int:
        """Integer value; raises if half-odd."""
        if self.twice % 2:
            raise DomainError(f"{self} is not an integer")
        return self.twice // 2

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice + HalfInt.of(other).twice)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __float__(self) -> float:
        return self.twice / 2

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"


def projections(j: HalfInt) -> list[HalfInt]:
    """All m = -j, -j+1, ..., j."""
    return [HalfInt(t) for t in range(-j.twice, j.twice + 1, 2)]


def check_projection(j: HalfInt, m: HalfInt) -> None:
    if j.twice < 0:
        raise DomainError(f"negative angular momentum {j}")
    if abs(m.twice) > j.twice or (j.twice - m.twice) % 2:
        raise DomainError(f"projection {m} invalid for j = {j}")


def phase(twice_exponent: int) -> int:
    """``(-1)**e`` for an exponent given as its double; e must be an integer."""
    if twice_exponent % 2:
        raise AssertionError(f"half-odd phase exponent {twice_exponent}/2")
    return -1 if (twice_exponent // 2) % 2 else 1


def half_factorial(twice: int) -> int:
    """Factorial of an integer-valued expression passed as its double."""
    if twice % 2:
        raise AssertionError(f"factorial of half-odd value {twice}/2")
    return int_factorial(twice // 2)


# ---------------------------------------------------------------------------
# signed square roots of rationals

@dataclass(frozen=True)
class SqrtRational:
    """The real number ``sign * sqrt(radicand)``."""

    sign: int
    radicand: Fraction

    def __post_init__(self):
        rad = Fraction(self.radicand)
        if rad < 0:
            raise DomainError(f"negative radicand {rad}")
        if self.sign not in (-1, 0, 1):
            raise DomainError(f"sign must be -1, 0 or 1, got {self.sign}")
        if (self.sign == 0) != (rad == 0):
            raise DomainError("sign is zero exactly when the radicand is zero")
        object.__setattr__(self, "radicand", rad)

    @classmethod
    def zero(cls) -> "SqrtRational":
        return cls(0, Fraction(0))

    @classmethod
    def sqrt(cls, radicand: RationalLike) -> "SqrtRational":
        """Positive square root of a nonnegative rational."""
        rad = as_rational(radicand)
        return cls(1 if rad else 0, rad)

    @classmethod
    def from_rational(cls, r: RationalLike) -> "SqrtRational":
        r = as_rational(r)
        return cls((r > 0) - (r < 0), r * r)

    def __mul__(self, other):
        if isinstance(other, SqrtRational):
            return sqrt_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return sqrt_scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "SqrtRational":
        return SqrtRational(-self.sign, self.radicand)

    def __bool__(self) -> bool:
        return self.sign != 0

    def square(self) -> Fraction:
        return self.radicand

    def signed_square(self) -> Fraction:
        """``sign * radicand``; exact and order-preserving stand-in for the value."""
        return self.sign * self.radicand

    def as_rational(self) -> Fraction | None:
        """Exact rational value when the radicand is a perfect square, else None."""
        p, q = self.radicand.numerator, self.radicand.denominator
        rp, rq = math.isqrt(p), math.isqrt(q)
        if rp * rp == p and rq * rq == q:
            return self.sign * Fraction(rp, rq)
        return None

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        p, q = self.radicand.numerator, self.radicand.denominator
        # big radicands overflow float division; scale through logs of ints
        try:
            return self.sign * math.sqrt(p / q)
        except OverflowError:
            return self.sign * math.exp(0.5 * (math.log(p) - math.log(q)))

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        body = f"sqrt({format_rational(self.radicand)})"
        return body if self.sign > 0 else "-" + body


def sqrt_mul(x: SqrtRational, y: SqrtRational) -> SqrtRational:
    sign = x.sign * y.sign
    if sign == 0:
        return SqrtRational.zero()
    return SqrtRational(sign, x.radicand * y.radicand)


def sqrt_scale(x: SqrtRational, r: RationalLike) -> SqrtRational:
    r = as_rational(r)
    sign = x.sign * ((r > 0) - (r < 0))
    if sign == 0:
        return SqrtRational.zero()
    return SqrtRational(sign, r * r * x.radicand)


def sqrt_inv(x: SqrtRational) -> SqrtRational:
    if x.sign == 0:
        raise ZeroDivisionError("inverse of zero SqrtRational")
    return SqrtRational(x.sign, 1 / x.radicand)


# ---------------------------------------------------------------------------
# coupling normalisations

def triangle_ok(j1: HalfInt, j2: HalfInt, j3: HalfInt) -> bool:
    a, b, c = j1.twice, j2.twice, j3.twice
    return (
        min(a, b, c) >= 0
        and (a + b + c) % 2 == 0
        and c <= a + b
        and a <= b + c
        and b <= a + c
    )


def triangle_delta(j1: HalfInt, j2: HalfInt, j3: HalfInt) -> SqrtRational:
    """``+sqrt((-j1+j2+j3)! (j1-j2+j3)! (j1+j2-j3)! / (j1+j2+j3+1)!)``."""
    j1, j2, j3 = HalfInt.of(j1), HalfInt.of(j2), HalfInt.of(j3)
    if not triangle_ok(j1, j2, j3):
        raise DomainError(f"({j1}, {j2}, {j3}) violates the triangle rule")
    a, b, c = j1.twice, j2.twice, j3.twice
    num = half_factorial(-a + b + c) * half_factorial(a - b + c) * half_factorial(a + b - c)
    return SqrtRational.sqrt(Fraction(num, half_factorial(a + b + c + 2)))


def proj_norm(pairs: Iterable[tuple[HalfInt, HalfInt]]) -> SqrtRational:
    """``+sqrt(prod (j-m)! (j+m)!)`` over (j, m) pairs."""
    prod = 1
    for j, m in pairs:
        j, m = HalfInt.of(j), HalfInt.of(m)
        check_projection(j, m)
        prod *= half_factorial(j.twice - m.twice) * half_factorial(j.twice + m.twice)
    return SqrtRational.sqrt(prod)


# ---------------------------------------------------------------------------
# canonical text format

def format_rational(r: RationalLike) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if any(c in text for c in ".eE"):
        raise ValueError(f"decimal literal {text!r} not accepted; use p/q")
    return Fraction(text)


def parse_halfint(text: str) -> HalfInt:
    f = parse_rational(text)
    if f.denominator not in (1, 2):
        raise ValueError(f"{text!r} is not an integer or half-integer")
    return HalfInt(int(2 * f))


def parse_sqrt_rational(text: str) -> SqrtRational:
    text = text.strip()
    if text == "0":
        return SqrtRational.zero()
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:]
    if not (text.startswith("sqrt(") and text.endswith(")")):
        raise ValueError(f"not a canonical sqrt literal: {text!r}")
    return SqrtRational(sign, parse_rational(text[5:-1]))
