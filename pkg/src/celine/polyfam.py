"""Sister Celine-type polynomial families over the exact hypergeometric engine.

Every family takes its parameters explicitly; extra numerator/denominator
parameters are plain lists.  The Chebyshev and Gegenbauer recurrences are
float oracles only, the hypergeometric path is the canonical evaluator.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exact import (
    DomainError,
    UnsupportedRegimeError,
    as_rational,
    factorial,
    pochhammer,
)
from .hypergeom import param_set, pfq_exact, pfq_real


def _jacobi_norm(n: int, alpha: Fraction) -> Fraction:
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    norm = pochhammer(1 + alpha, n)
    if norm == 0:
        raise DomainError(f"(1+alpha)_n vanishes for alpha={alpha}, n={n}")
    return norm / factorial(n)


def _jacobi_params(n, alpha, beta):
    return [-n, n + alpha + beta + 1], [1 + alpha]


def jacobi(n: int, alpha, beta, x) -> Fraction:
    """``P_n^(alpha,beta)(x) = (1+alpha)_n/n! 2F1[-n, n+alpha+beta+1; 1+alpha; (1-x)/2]``."""
    alpha, beta, x = as_rational(alpha), as_rational(beta), as_rational(x)
    norm = _jacobi_norm(n, alpha)
    top, bottom = _jacobi_params(n, alpha, beta)
    return norm * pfq_exact(top, bottom, (1 - x) / 2)


def jacobi_real(n: int, alpha, beta, x: float) -> float:
    alpha, beta = as_rational(alpha), as_rational(beta)
    norm = _jacobi_norm(n, alpha)
    top, bottom = _jacobi_params(n, alpha, beta)
    return float(norm) * pfq_real(top, bottom, (1.0 - x) / 2.0)


def hahn(n: int, x: int, alpha, beta, N: int) -> Fraction:
    """``Q_n(x; alpha, beta, N) = 3F2[-x, -n, n+alpha+beta+1; -N, 1+alpha; 1]``.

    ``x`` may be any rational; termination comes from ``-n`` (or ``-x`` when
    ``x`` is a smaller nonnegative integer).
    """
    if not 0 <= n <= N:
        raise DomainError(f"Hahn degree n={n} outside 0..N={N}")
    alpha, beta, x = as_rational(alpha), as_rational(beta), as_rational(x)
    return pfq_exact([-x, -n, n + alpha + beta + 1], [-N, 1 + alpha], 1)


def chebyshev_u(n: int, x: float) -> float:
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    prev, cur = 1.0, 2.0 * x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def gegenbauer(n: int, alpha, x: float) -> float:
    """``C_n^(alpha)(x)`` by the three-term recurrence."""
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    a = float(as_rational(alpha))
    prev, cur = 1.0, 2.0 * a * x
    if n == 0:
        return prev
    for k in range(1, n):
        prev, cur = cur, (2.0 * (k + a) * x * cur - (k + 2.0 * a - 1.0) * prev) / (k + 1)
    return cur


def celine_f(a_params: Sequence, b_params: Sequence, x, n: int) -> Fraction:
    """Sister Celine's ``f_n[a; b; x] = 2+pF2+q[-n, n+1, a; 1, 1/2, b; x]``."""
    return pfq_exact([-n, n + 1, *a_params], [1, Fraction(1, 2), *b_params], as_rational(x))


def jain_J(c, k: int, a_params: Sequence, b_params: Sequence, x, n: int) -> Fraction:
    """Jain's generalisation with parameter blocks of width k.

    For ``k = 1`` the block of width ``k-1`` is empty and ``0**0`` is 1.
    """
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    c, x = as_rational(c), as_rational(x)
    top = [-n, *(param_set(k - 1, c + n) if k > 1 else []), *a_params]
    bottom = [*param_set(k, c), *b_params]
    scale = Fraction((k - 1) ** (k - 1))
    return pochhammer(c, n) / factorial(n) * pfq_exact(top, bottom, scale * x)


def shah_F(m: int, lam, mu, a_params: Sequence, b_params: Sequence, x, n: int) -> Fraction:
    """Shah's ``x^((m-1)n) pFq[block(m, -n), a; b; lam x^mu]``.

    The block is ``-n/m, (-n+1)/m, ..., (-n+m-1)/m``; exact evaluation needs
    an integer ``mu``.
    """
    if m < 1:
        raise DomainError(f"m must be a positive integer, got {m}")
    lam, mu, x = as_rational(lam), as_rational(mu), as_rational(x)
    if mu.denominator != 1:
        raise UnsupportedRegimeError(f"non-integer exponent mu={mu} on the exact path")
    if x == 0 and mu < 0:
        raise DomainError("x = 0 with negative exponent")
    top = [*param_set(m, -n), *a_params]
    arg = lam * x ** int(mu)
    return x ** ((m - 1) * n) * pfq_exact(top, list(b_params), arg)


def khan_f(k: int, lam, mu, a_params: Sequence, b_params: Sequence, x, n: int) -> Fraction:
    """Khan's ``pFq[block(k, -n), n+lam, a; block(k+1, mu), b; x]``."""
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    lam, mu = as_rational(lam), as_rational(mu)
    top = [*param_set(k, -n), n + lam, *a_params]
    bottom = [*param_set(k + 1, mu), *b_params]
    return pfq_exact(top, bottom, as_rational(x))


def rice_H(n: int, alpha, beta, xi, p, v) -> Fraction:
    """Generalized Rice polynomial ``(1+alpha)_n/n! 3F2[-n, n+alpha+beta+1, xi; 1+alpha, p; v]``."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    norm = _jacobi_norm(n, alpha)
    return norm * pfq_exact(
        [-n, n + alpha + beta + 1, as_rational(xi)], [1 + alpha, as_rational(p)], as_rational(v)
    )


def ahmad_A(alpha, beta, a_params: Sequence, b_params: Sequence, x, n: int) -> Fraction:
    alpha, beta = as_rational(alpha), as_rational(beta)
    top = [-n, n + alpha + beta + 1, *a_params]
    bottom = [1 + alpha, Fraction(1, 2), *b_params]
    return pochhammer(1 + alpha + beta, n) / factorial(n) * pfq_exact(top, bottom, as_rational(x))
