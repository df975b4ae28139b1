"""Angular-momentum quantities wired to the hypergeometric core.

Exact quantities (3j, Clebsch-Gordan, Koornwinder forms, Khan's integral)
return :class:`~celine.exact.SqrtRational` or Fraction values.  Characters
and d-functions are float-regime: trigonometric arguments are doubles, but
every polynomial coefficient is still built exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    DomainError,
    HalfInt,
    SqrtRational,
    as_rational,
    check_projection,
    double_factorial,
    factorial,
    half_factorial,
    int_factorial,
    phase,
    pochhammer,
    proj_norm,
    sqrt_inv,
    sqrt_mul,
    sqrt_scale,
    triangle_delta,
    triangle_ok,
)
from .hypergeom import param_set, pfq_exact, pfq_real, series_coefficients
from .polyfam import hahn, jacobi_real, khan_f

H = HalfInt.of


@dataclass(frozen=True)
class ThreeJArgs:
    j1: HalfInt
    j2: HalfInt
    j3: HalfInt
    m1: HalfInt
    m2: HalfInt
    m3: HalfInt

    @classmethod
    def of(cls, j1, j2, j3, m1, m2, m3) -> "ThreeJArgs":
        return cls(H(j1), H(j2), H(j3), H(m1), H(m2), H(m3))

    def twice(self) -> tuple[int, ...]:
        return tuple(v.twice for v in (self.j1, self.j2, self.j3, self.m1, self.m2, self.m3))

    def check(self) -> None:
        for j, m in ((self.j1, self.m1), (self.j2, self.m2), (self.j3, self.m3)):
            check_projection(j, m)

    def selection_ok(self) -> bool:
        return (
            self.m1.twice + self.m2.twice + self.m3.twice == 0
            and triangle_ok(self.j1, self.j2, self.j3)
        )


@dataclass(frozen=True)
class CGArgs:
    """Labels of ``C^{c gamma}_{a alpha, b beta}``."""

    a: HalfInt
    alpha: HalfInt
    b: HalfInt
    beta: HalfInt
    c: HalfInt
    gamma: HalfInt

    @classmethod
    def of(cls, a, alpha, b, beta, c, gamma) -> "CGArgs":
        return cls(H(a), H(alpha), H(b), H(beta), H(c), H(gamma))

    def to_threej(self) -> ThreeJArgs:
        return ThreeJArgs(self.a, self.b, self.c, self.alpha, self.beta, -self.gamma)


# ---------------------------------------------------------------------------
# characters

def _sin2_quarter(omega: float) -> float:
    return math.sin(omega / 4.0) ** 2


def character_prefactor(j, *, as_printed: bool = False) -> Fraction:
    """Rational factor in front of ``2F1[-2j, 2j+2; 3/2; sin^2(omega/4)]``.

    Default: ``(2j+1)! 2^(2j) / (4j+1)!! * (3/2)_{2j}/(2j)!``, the lambda = 0
    normalisation of the generalized character; it reduces to ``2j+1``.
    ``as_printed=True`` uses ``(4j-2)!!/(2 (4j+1)!!)`` in place of the first
    factor, which is off from the trace by a j-dependent constant.
    """
    j = H(j)
    if j.twice == 0:
        return Fraction(1)
    n = j.twice
    jacobi_norm = pochhammer(Fraction(3, 2), n) / factorial(n)
    if as_printed:
        lead = double_factorial(2 * n - 2) / (2 * double_factorial(2 * n + 1))
    else:
        lead = factorial(n + 1) * 2**n / double_factorial(2 * n + 1)
    return lead * jacobi_norm


def character(j, omega: float, *, as_printed: bool = False) -> float:
    """Character of the spin-j irrep through ``2F1[-2j, 2j+2; 3/2; sin^2(omega/4)]``."""
    j = H(j)
    if j.twice < 0:
        raise DomainError(f"negative angular momentum {j}")
    if j.twice == 0:
        return 1.0
    n = j.twice
    series = pfq_real([-n, n + 2], [Fraction(3, 2)], _sin2_quarter(omega))
    return float(character_prefactor(j, as_printed=as_printed)) * series


def character_closed(j, omega: float) -> float:
    j = H(j)
    if j.twice < 0:
        raise DomainError(f"negative angular momentum {j}")
    return math.fsum(math.cos(t / 2.0 * omega) for t in range(-j.twice, j.twice + 1, 2))


def _check_lambda(j: HalfInt, lam: int) -> int:
    lam = HalfInt.of(lam)
    if not lam.is_integer or not 0 <= lam.twice // 2 <= j.twice:
        raise DomainError(f"order lambda={lam} outside 0..2j for j={j}")
    return lam.twice // 2


def gen_character(j, lam, omega: float) -> float:
    """Generalized character of order lambda via ``2F1[lam-2j, 2j+lam+2; lam+3/2]``."""
    j = H(j)
    lam = _check_lambda(j, lam)
    s = j.twice - lam
    root = SqrtRational.sqrt(
        (j.twice + 1) * Fraction(int_factorial(j.twice + lam + 1), int_factorial(s))
    )
    rational = Fraction(2**s) * pochhammer(lam + Fraction(3, 2), s) / double_factorial(2 * j.twice + 1)
    series = pfq_real([lam - j.twice, j.twice + lam + 2], [lam + Fraction(3, 2)], _sin2_quarter(omega))
    return float(sqrt_scale(root, rational)) * math.sin(omega / 2.0) ** lam * series


def gen_character_jacobi(j, lam, omega: float) -> float:
    """Generalized character of order lambda via ``P_{2j-lam}^(lam+1/2, lam+1/2)(cos omega/2)``."""
    j = H(j)
    lam = _check_lambda(j, lam)
    s = j.twice - lam
    root = SqrtRational.sqrt((j.twice + 1) * int_factorial(s) * int_factorial(j.twice + lam + 1))
    rational = Fraction(2**s) / double_factorial(2 * j.twice + 1)
    a = lam + Fraction(1, 2)
    p = jacobi_real(s, a, a, math.cos(omega / 2.0))
    return float(sqrt_scale(root, rational)) * math.sin(omega / 2.0) ** lam * p


# ---------------------------------------------------------------------------
# Wigner d-functions

def _check_d(j, m, k) -> tuple[HalfInt, HalfInt, HalfInt]:
    j, m, k = H(j), H(m), H(k)
    check_projection(j, m)
    check_projection(j, k)
    return j, m, k


def wigner_d(j, m, k, theta: float, *, misprint: bool = False) -> float:
    """``d^j_{mk}(theta)`` through ``P_s^(mu,nu)(cos theta)``.

    ``mu = |m-k|``, ``nu = |m+k|``, ``s = j - (mu+nu)/2``.  ``misprint=True``
    swaps ``(s+mu+nu)!`` for ``(s + mu*nu)!`` and exists for mutation tests.
    """
    j, m, k = _check_d(j, m, k)
    mu = abs(m.twice - k.twice) // 2
    nu = abs(m.twice + k.twice) // 2
    s = (j.twice - (mu + nu)) // 2
    xi = 1 if k.twice >= m.twice else phase(k.twice - m.twice)
    top = s + mu * nu if misprint else s + mu + nu
    ratio = Fraction(int_factorial(s) * int_factorial(top), int_factorial(s + mu) * int_factorial(s + nu))
    half = theta / 2.0
    return (
        xi
        * math.sqrt(ratio)
        * math.sin(half) ** mu
        * math.cos(half) ** nu
        * jacobi_real(s, mu, nu, math.cos(theta))
    )


def wigner_d_sum(j, m, k, theta: float) -> float:
    """Classical finite-sum formula for ``d^j_{mk}(theta)``."""
    j, m, k = _check_d(j, m, k)
    jm, jpm = (j.twice - m.twice) // 2, (j.twice + m.twice) // 2
    jk, jpk = (j.twice - k.twice) // 2, (j.twice + k.twice) // 2
    mk = (m.twice - k.twice) // 2
    pref = math.sqrt(
        int_factorial(jpm) * int_factorial(jm) * int_factorial(jpk) * int_factorial(jk)
    )
    c, s_ = math.cos(theta / 2.0), math.sin(theta / 2.0)
    cos_top = (2 * j.twice + k.twice - m.twice) // 2
    terms = []
    for t in range(max(0, -mk), min(jpk, jm) + 1):
        denom = int_factorial(jpk - t) * int_factorial(t) * int_factorial(mk + t) * int_factorial(jm - t)
        sign = -1 if (mk + t) % 2 else 1
        terms.append(sign * pref / denom * c ** (cos_top - 2 * t) * s_ ** (mk + 2 * t))
    return math.fsum(terms)


# ---------------------------------------------------------------------------
# 3j and Clebsch-Gordan

def _as_threej(args) -> ThreeJArgs:
    if isinstance(args, ThreeJArgs):
        return args
    return ThreeJArgs.of(*args)


def threej_3f2(args) -> Fraction:
    """The unit-argument 3F2 factor of the hypergeometric 3j expression."""
    a = _as_threej(args)
    j1, j2, j3, m1, m2, m3 = a.twice()
    return pfq_exact(
        [Fraction(m1 - j1, 2), Fraction(j3 - j1 - j2, 2), Fraction(-j1 - j2 - j3 - 2, 2)],
        [-j1, Fraction(-j1 - j2 - m3, 2)],
        1,
    )


def threej_prefactor(args, *, as_printed: bool = False) -> SqrtRational:
    """Everything but the 3F2: phase, factorial ratio and ``Delta / delta``.

    The 3F2 needs ``(-1)^(j1-j2-m3) (2j1)! (j1+j2+m3)! (j3-m3)! /
    ((j1-j2+j3)! (j1+j2-j3)!)`` in front of ``Delta / delta``.
    ``as_printed=True`` drops ``(j3-m3)!`` and uses the phase
    ``(-1)^(j1-j2+m3)``; that variant disagrees with Racah's formula and is
    kept so the disagreement can be reported.
    """
    a = _as_threej(args)
    j1, j2, j3, m1, m2, m3 = a.twice()
    ratio = Fraction(
        int_factorial(j1) * half_factorial(j1 + j2 + m3),
        half_factorial(j1 - j2 + j3) * half_factorial(j1 + j2 - j3),
    )
    if as_printed:
        sign = phase(j1 - j2 + m3)
    else:
        sign = phase(j1 - j2 - m3)
        ratio *= half_factorial(j3 - m3)
    norm = sqrt_mul(
        triangle_delta(a.j1, a.j2, a.j3),
        sqrt_inv(proj_norm([(a.j1, a.m1), (a.j2, a.m2), (a.j3, a.m3)])),
    )
    return sqrt_scale(norm, sign * ratio)


def threej(args, *, series=None, as_printed: bool = False) -> SqrtRational:
    """Wigner 3j symbol from its unit-argument 3F2 representation.

    ``series`` may replace the 3F2 evaluator (it receives the ThreeJArgs);
    the harness uses it to push the value through a transformation.
    Selection-rule failures give 0; malformed (j, m) pairs raise.
    """
    a = _as_threej(args)
    a.check()
    if not a.selection_ok():
        return SqrtRational.zero()
    value = (series or threej_3f2)(a)
    return sqrt_scale(threej_prefactor(a, as_printed=as_printed), value)


def threej_racah(args) -> SqrtRational:
    """Wigner 3j symbol from Racah's single-sum formula."""
    a = _as_threej(args)
    a.check()
    if not a.selection_ok():
        return SqrtRational.zero()
    j1, j2, j3, m1, m2, m3 = a.twice()
    # all bounds below are integers once the selection rules hold
    k1 = (j3 - j2 + m1) // 2
    k2 = (j3 - j1 - m2) // 2
    n1 = (j1 + j2 - j3) // 2
    n2 = (j1 - m1) // 2
    n3 = (j2 + m2) // 2
    total = Fraction(0)
    for t in range(max(0, -k1, -k2), min(n1, n2, n3) + 1):
        den = (
            int_factorial(t)
            * int_factorial(k1 + t)
            * int_factorial(k2 + t)
            * int_factorial(n1 - t)
            * int_factorial(n2 - t)
            * int_factorial(n3 - t)
        )
        total += Fraction(-1 if t % 2 else 1, den)
    norm = sqrt_mul(
        triangle_delta(a.j1, a.j2, a.j3),
        proj_norm([(a.j1, a.m1), (a.j2, a.m2), (a.j3, a.m3)]),
    )
    return sqrt_scale(norm, phase(j1 - j2 - m3) * total)


def clebsch(args, *, threej_fn=threej) -> SqrtRational:
    """``C^{c gamma}_{a alpha, b beta} = (-1)^(a-b+gamma) sqrt(2c+1) (a b c; alpha beta -gamma)``."""
    if not isinstance(args, CGArgs):
        args = CGArgs.of(*args)
    value = threej_fn(args.to_threej())
    tw = args.a.twice - args.b.twice + args.gamma.twice
    if value.sign == 0:
        return value
    # a - b + gamma is an integer whenever the 3j is nonzero
    return sqrt_scale(sqrt_mul(value, SqrtRational.sqrt(args.c.twice + 1)), phase(tw))


# ---------------------------------------------------------------------------
# Koornwinder CG <-> Hahn forms

def _check_koornwinder(n, x, alpha, beta, N) -> None:
    for name, v in (("n", n), ("x", x), ("alpha", alpha), ("beta", beta), ("N", N)):
        if not isinstance(v, int) or v < 0:
            raise DomainError(f"{name} must be a nonnegative integer, got {v!r}")
    if n > N or x > N:
        raise DomainError(f"need n, x <= N; got n={n}, x={x}, N={N}")


def koornwinder_first_labels(n, x, alpha, beta, N) -> CGArgs:
    return CGArgs(
        HalfInt(N), HalfInt(N - 2 * x),
        HalfInt(N + alpha + beta), HalfInt(alpha - beta - N + 2 * x),
        HalfInt(2 * n + alpha + beta), HalfInt(alpha - beta),
    )


def cg_from_hahn_first(n: int, x: int, alpha: int, beta: int, N: int) -> SqrtRational:
    """Clebsch-Gordan coefficient as a Hahn polynomial ``Q_n(x; alpha, beta, N)``.

    Labels are those of :func:`koornwinder_first_labels`.
    """
    _check_koornwinder(n, x, alpha, beta, N)
    f = int_factorial
    radicand = Fraction(
        (2 * n + alpha + beta + 1) * f(N - x + beta) * f(x + alpha) * f(n + alpha) * f(n + alpha + beta),
        f(x) * f(N - x) * f(n + beta) * f(n) * f(N - n) * f(N + n + alpha + beta + 1),
    )
    rational = Fraction(-1 if x % 2 else 1) * f(N) / f(alpha) * hahn(n, x, alpha, beta, N)
    return sqrt_scale(SqrtRational.sqrt(radicand), rational)


def koornwinder_second_labels(n, x, alpha, beta, N) -> CGArgs:
    """``C^{(N-n+(alpha+beta)/2) ((alpha+beta)/2)}_{((N+alpha)/2) ((N+alpha)/2-x), ((N+beta)/2) ((beta-N)/2+x)}``."""
    return CGArgs(
        HalfInt(N + alpha), HalfInt(N + alpha - 2 * x),
        HalfInt(N + beta), HalfInt(beta - N + 2 * x),
        HalfInt(2 * N - 2 * n + alpha + beta), HalfInt(alpha + beta),
    )


def koornwinder_second_labels_printed(n, x, alpha, beta, N) -> CGArgs:
    """First-form couplings with ``c = N-n+(alpha+beta)/2``, ``gamma = (beta-alpha)/2``.

    The projections only add up to gamma when alpha == beta.
    """
    first = koornwinder_first_labels(n, x, alpha, beta, N)
    return CGArgs(
        first.a, first.alpha, first.b, first.beta,
        HalfInt(2 * N - 2 * n + alpha + beta), HalfInt(beta - alpha),
    )


def cg_from_hahn_second(
    n: int, x: int, alpha: int, beta: int, N: int,
    *, factorial_reading: bool = True, as_printed: bool = False,
) -> SqrtRational:
    """Clebsch-Gordan coefficient as ``Q_n(x; -N-alpha-1, -N-beta-1, N)``.

    Labels are those of :func:`koornwinder_second_labels`.  The factor
    ``2N-n+alpha+beta+1`` enters the radicand as a factorial unless
    ``factorial_reading`` is False.  ``as_printed=True`` swaps in the
    radicand ``(n+beta)! (n+alpha+beta)! / (N-n+beta)!`` in place of
    ``(N-n+beta)! (N-n+alpha+beta)! / (N-n+alpha)!``.
    """
    _check_koornwinder(n, x, alpha, beta, N)
    f = int_factorial
    last = 2 * N - n + alpha + beta + 1
    common = Fraction(
        2 * N - 2 * n + alpha + beta + 1,
        f(x) * f(N - x) * f(alpha + N - x) * f(beta + x)
        * f(n) * f(N - n) * (f(last) if factorial_reading else last),
    )
    if as_printed:
        radicand = common * Fraction(f(n + beta) * f(n + alpha + beta), f(N - n + beta))
    else:
        radicand = common * Fraction(f(N - n + beta) * f(N - n + alpha + beta), f(N - n + alpha))
    q = hahn(n, x, -N - alpha - 1, -N - beta - 1, N)
    rational = Fraction(f(alpha + N) * f(N)) * q
    return sqrt_scale(SqrtRational.sqrt(radicand), rational)


# ---------------------------------------------------------------------------
# Rajeswari's 3j <-> Hahn substitutions

def _khan_hahn(n, x, alpha, beta, N) -> Fraction:
    """``f_n(1, 1+alpha+beta, 1+2alpha; alpha+1/2, -x; -N; 1)``, a Hahn polynomial in disguise."""
    return khan_f(1, 1 + alpha + beta, 1 + 2 * alpha, [alpha + Fraction(1, 2), -x], [-N], 1, n)


def rajeswari_first_params(args, *, as_printed: bool = False) -> tuple[int, int, int, Fraction, Fraction]:
    """``n = j1+j2-j3, x = j2+m2, N = 2j2, alpha = j3-j2+m1, beta = j3-j2-m1``.

    ``as_printed`` gives ``N = 2j2+1``, the value for a Hahn polynomial whose
    lower parameter is ``-N+1``.
    """
    a = _as_threej(args)
    j1, j2, j3, m1, m2, m3 = a.twice()
    return (
        (j1 + j2 - j3) // 2,
        (j2 + m2) // 2,
        j2 + (1 if as_printed else 0),
        Fraction(j3 - j2 + m1, 2),
        Fraction(j3 - j2 - m1, 2),
    )


def rajeswari_first(args, *, as_printed: bool = False) -> tuple[Fraction, SqrtRational]:
    """Both sides of the first substitution identity at the given 3j labels.

    Left: the Khan-form Hahn polynomial.  Right: phase, factorial ratios and
    ``(j3-j2+n j2 j3; m1 x-j2 j2-m1-x)``.  Raises DomainError (PoleError for
    the left side) outside the identity's domain.
    """
    a = _as_threej(args)
    a.check()
    n, x, N, alpha, beta = rajeswari_first_params(a, as_printed=as_printed)
    lhs = _khan_hahn(n, x, alpha, beta, N)
    j1, j2, j3, m1, m2, m3 = a.twice()
    n2, x2 = 2 * n, 2 * x
    hf = half_factorial
    if as_printed:
        sign = phase(2 * j2 + m1 + n2 + x2)
        lead = Fraction(hf(j3 - j2 - m1), int_factorial(j2))
        first = Fraction(hf(j2 - n2) * hf(n2) * hf(2 * j3 + n2 + 2), hf(2 * j1 - 2 * j2 + n2) * hf(j3 - j2 + m1 + n2))
    else:
        sign = phase(j1 - j2 - m3)
        lead = Fraction(hf(j3 - j2 + m1), int_factorial(j2))
        first = Fraction(hf(2 * j2 - n2) * hf(n2) * hf(2 * j3 + n2 + 2), hf(2 * j1 - n2) * hf(j3 - j2 + m1 + n2))
    second = Fraction(hf(x2) * hf(2 * j2 - x2) * hf(j3 - j2 - m1 + n2), hf(j3 - j2 + m1 + x2) * hf(j3 + j2 - m1 - x2))
    tj = threej(ThreeJArgs(
        HalfInt(j3 - j2 + n2), a.j2, a.j3, a.m1, HalfInt(x2 - j2), HalfInt(j2 - m1 - x2),
    ))
    rhs = sqrt_scale(sqrt_mul(SqrtRational.sqrt(first * second), tj), sign * lead)
    return lhs, rhs


def rajeswari_second_params(args, *, as_printed: bool = False) -> tuple[int, int, int, Fraction, Fraction]:
    """``n = j1+j2-j3, x = j1-m1, N = 2j1, alpha = -j1-j2-m3-1, beta = -j1-j2+m3-1``."""
    a = _as_threej(args)
    j1, j2, j3, m1, m2, m3 = a.twice()
    return (
        (j1 + j2 - j3) // 2,
        (j1 - m1) // 2,
        j1 + (1 if as_printed else 0),
        Fraction(-j1 - j2 - m3 - 2, 2),
        Fraction(-j1 - j2 + m3 - 2, 2),
    )


def rajeswari_second(args, *, as_printed: bool = False) -> tuple[Fraction, SqrtRational]:
    """Both sides of the alternative substitution identity.

    The 3j on the right is ``(j1 j2 j1+j2-n; j1-x x-j1-m3 m3)``;
    ``as_printed=True`` uses ``-j1+m3+x`` as its middle projection.
    """
    a = _as_threej(args)
    a.check()
    n, x, N, alpha, beta = rajeswari_second_params(a, as_printed=as_printed)
    lhs = _khan_hahn(n, x, alpha, beta, N)
    j1, j2, j3, m1, m2, m3 = a.twice()
    n2, x2 = 2 * n, 2 * x
    hf = half_factorial
    lead = Fraction(phase(j1 - j2 - m3), int_factorial(j1) * hf(j1 + j2 + m3))
    radicand = Fraction(hf(2 * j1 - n2) * hf(n2) * hf(2 * j1 + 2 * j2 - n2 + 2), hf(2 * j2 - n2) * hf(j1 + j2 - m3 - n2))
    radicand *= hf(x2) * hf(2 * j1 - x2) * hf(j1 + j2 + m3 - x2)
    radicand *= hf(-j1 + j2 - m3 + x2) * hf(j1 + j2 + m3 - n2)
    middle = -j1 + m3 + x2 if as_printed else x2 - j1 - m3
    tj = threej(ThreeJArgs(
        a.j1, a.j2, HalfInt(j1 + j2 - n2), HalfInt(j1 - x2), HalfInt(middle), a.m3,
    ))
    rhs = sqrt_scale(sqrt_mul(SqrtRational.sqrt(radicand), tj), lead)
    return lhs, rhs


# ---------------------------------------------------------------------------
# Weber-Erdelyi inside the 3j

def threej_3f2_transformed(args, transform) -> Fraction:
    """The 3j's 3F2 pushed through a unit-argument transformation.

    Parameters are assigned ``-n = m1-j1``, ``alpha = -j1-j2-j3-1``,
    ``beta = j3-j1-j2``, ``gamma = -2j1``, ``delta = -j1-j2-m3``; this
    keeps every prefactor and transformed series pole-free.
    """
    a = _as_threej(args)
    j1, j2, j3, m1, m2, m3 = a.twice()
    prefactor, series = transform(
        (j1 - m1) // 2,
        Fraction(-j1 - j2 - j3 - 2, 2),
        Fraction(j3 - j1 - j2, 2),
        Fraction(-j1, 1),
        Fraction(-j1 - j2 - m3, 2),
    )
    return prefactor * series.evaluate()


# ---------------------------------------------------------------------------
# Khan's Gamma integral

def khan_gamma_integral_lhs(n: int, alpha, x) -> Fraction:
    """``1/Gamma(alpha+1/2) int_0^inf t^(alpha-1/2) e^-t f_n(1, 2alpha+1; -; -; x t) dt``.

    Each power ``t^k`` of the polynomial integrates to ``(alpha+1/2)_k``
    after division by ``Gamma(alpha+1/2)``, so the result is exact.
    """
    alpha, x = as_rational(alpha), as_rational(x)
    shift = alpha + Fraction(1, 2)
    if shift.denominator == 1 and shift <= 0:
        raise DomainError(f"Gamma(alpha+1/2) has a pole at alpha={alpha}")
    lam = mu = 2 * alpha + 1
    coeffs = series_coefficients([*param_set(1, -n), n + lam], param_set(2, mu))
    total = Fraction(0)
    power = Fraction(1)
    for k, c in enumerate(coeffs):
        total += c * power * pochhammer(shift, k)
        power *= x
    return total
