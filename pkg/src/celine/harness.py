"""Identity suites: registry, grids, runner and JSON reports.

Each suite sweeps a parameter grid, compares the formula under test with an
independent oracle and returns an :class:`IdentityReport`.  Exact suites
compare Fractions / SqrtRationals for equality.  Float suites use absolute
tolerance when the expected value is at most 1 in magnitude and relative
tolerance otherwise.  Runs are deterministic in ``(suite, scale, seed)``;
only ``wall_time_s`` varies between runs.
"""
from __future__ import annotations

import itertools
import json
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Mapping

from . import angular as ang
from . import hypergeom as hg
from . import polyfam as pf
from .exact import (
    CelineError,
    DomainError,
    HalfInt,
    PoleError,
    SqrtRational,
    factorial,
    format_rational,
    pochhammer,
)

SCALES = ("small", "default", "large")
FLOAT_TOL = 1e-12
UNITARITY_TOL = 1e-11
SPREAD_TOL = 1e-10


class SuiteNotFoundError(CelineError, LookupError):
    """No suite registered under the requested id."""


# ---------------------------------------------------------------------------
# reports

def render(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass
class Failure:
    inputs: dict[str, str]
    lhs: str
    rhs: str
    delta: float | None

    def to_dict(self) -> dict:
        return {"inputs": self.inputs, "lhs": self.lhs, "rhs": self.rhs, "delta": self.delta}


@dataclass
class IdentityReport:
    suite: str
    passed: bool
    cases_run: int
    failures: list[Failure]
    wall_time_s: float
    notes: str = ""

    def to_dict(self, *, timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "pass": self.passed,
            "cases_run": self.cases_run,
            "failures": [f.to_dict() for f in self.failures],
            "wall_time_s": self.wall_time_s,
            "notes": self.notes,
        }
        if not timing:
            del out["wall_time_s"]
        return out

    def to_json(self, *, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing=timing), indent=2)


@dataclass(frozen=True)
class IdentitySuite:
    id: str
    description: str
    grid: Mapping[str, str]
    comparison: str
    run: Callable[["_Tally", str, int], None] = field(repr=False, compare=False)


def _as_sqrt(value) -> SqrtRational:
    return value if isinstance(value, SqrtRational) else SqrtRational.from_rational(value)


def _close(got: float, want: float, tol: float) -> bool:
    scale = abs(want) if abs(want) > 1.0 else 1.0
    return abs(got - want) <= tol * scale


class _Tally:
    def __init__(self):
        self.cases = 0
        self.failures: list[Failure] = []
        self.notes: list[str] = []

    @staticmethod
    def _inputs(inputs: Mapping) -> dict[str, str]:
        return {k: render(v) for k, v in inputs.items()}

    def fail(self, inputs, lhs, rhs, delta=None) -> None:
        self.failures.append(Failure(self._inputs(inputs), render(lhs), render(rhs), delta))

    def exact(self, inputs, lhs, rhs) -> bool:
        self.cases += 1
        if isinstance(lhs, SqrtRational) or isinstance(rhs, SqrtRational):
            ok = _as_sqrt(lhs) == _as_sqrt(rhs)
        else:
            ok = lhs == rhs
        if not ok:
            self.fail(inputs, lhs, rhs, abs(float(lhs) - float(rhs)))
        return ok

    def close(self, inputs, got: float, want: float, tol: float = FLOAT_TOL) -> float:
        self.cases += 1
        diff = abs(got - want)
        if not _close(got, want, tol):
            self.fail(inputs, got, want, diff)
        return diff

    def error(self, inputs, exc: Exception) -> None:
        self.cases += 1
        self.fail(inputs, f"{type(exc).__name__}: {exc}", "-", None)

    def note(self, text: str) -> None:
        self.notes.append(text)


def _pick(scale: str, small, default, large):
    return {"small": small, "default": default, "large": large}[scale]


# ---------------------------------------------------------------------------
# shared grids

F = Fraction
FAMILY_PARAMS = (F(0), F(1, 2), F(1), F(2), F(7, 3))
FAMILY_X = (F(0), F(1), F(1, 2), F(-1, 3), F(2, 5))
THETAS = (0.0, math.pi / 7, math.pi / 3, math.pi / 2, 2 * math.pi / 3, math.pi)
# pi (2i+1)/25 is never a zero 2 pi k/(2j+1) of the closed character
OMEGAS = tuple(math.pi * (2 * i + 1) / 25 for i in range(12))


def _degrees(scale: str, bound: int) -> range:
    return range(1, _pick(scale, 4, bound, bound + 8) + 1)


def threej_configs(max_twice: int) -> Iterator[ang.ThreeJArgs]:
    """Valid nonvanishing-by-selection 3j arguments, twice-values up to ``max_twice``."""
    for a, b, c in itertools.product(range(max_twice + 1), repeat=3):
        if (a + b + c) % 2 or not abs(a - b) <= c <= a + b:
            continue
        for ma in range(-a, a + 1, 2):
            for mb in range(-b, b + 1, 2):
                mc = -ma - mb
                if abs(mc) <= c:
                    yield ang.ThreeJArgs(*(HalfInt(t) for t in (a, b, c, ma, mb, mc)))


def _threej_inputs(args: ang.ThreeJArgs) -> dict:
    return dict(zip(("j1", "j2", "j3", "m1", "m2", "m3"), (args.j1, args.j2, args.j3, args.m1, args.m2, args.m3)))


def _jacobi_scaled(n, alpha, beta, x) -> Fraction:
    """``n!/(1+alpha)_n P_n^(alpha,beta)(x)``."""
    return factorial(n) / pochhammer(1 + alpha, n) * pf.jacobi(n, alpha, beta, x)


# ---------------------------------------------------------------------------
# I1-I4, I12: polynomial families

def _run_khan_jacobi(t: _Tally, scale: str, seed: int) -> None:
    for n, a, b, x in itertools.product(_degrees(scale, 12), FAMILY_PARAMS, FAMILY_PARAMS, FAMILY_X):
        lhs = pf.khan_f(1, 1 + a + b, 1 + 2 * a, [a + F(1, 2)], [], (1 - x) / 2, n)
        lhs *= pochhammer(1 + a, n) / factorial(n)
        t.exact(dict(n=n, alpha=a, beta=b, x=x), lhs, pf.jacobi(n, a, b, x))


def _run_jain_jacobi(t: _Tally, scale: str, seed: int) -> None:
    for n, a, b, x in itertools.product(_degrees(scale, 12), FAMILY_PARAMS, FAMILY_PARAMS, FAMILY_X):
        c = 1 + a + b
        lhs = pf.jain_J(c, 2, [(a + b + 1) / 2, (a + b) / 2 + 1], [1 + a], x, n)
        rhs = pochhammer(c, n) / pochhammer(1 + a, n) * pf.jacobi(n, a, b, 1 - 2 * x)
        t.exact(dict(n=n, alpha=a, beta=b, x=x), lhs, rhs)


SHAH_RICE = ((F(2), F(3)), (F(3, 2), F(5, 2)))


def _run_shah(t: _Tally, scale: str, seed: int) -> None:
    degrees = _degrees(scale, 12)
    for n, a, b, x in itertools.product(degrees, FAMILY_PARAMS, FAMILY_PARAMS, FAMILY_X):
        inputs = dict(chain="jacobi", n=n, alpha=a, beta=b, x=x)
        lhs = pf.shah_F(1, 1, 1, [n + a + b + 1], [1 + a], x, n)
        t.exact(inputs, lhs, _jacobi_scaled(n, a, b, 1 - 2 * x))
        for xi, p in SHAH_RICE:
            inputs = dict(chain="rice", n=n, alpha=a, beta=b, xi=xi, p=p, x=x)
            lhs = pf.shah_F(1, 1, 1, [n + a + b + 1, xi], [1 + a, p], x, n)
            rhs = factorial(n) / pochhammer(1 + a, n) * pf.rice_H(n, a, b, xi, p, x)
            t.exact(inputs, lhs, rhs)
    # the m = 2 block: x^n 2F1[-n/2, (1-n)/2; 1/2; x^2] = ((x+x^2)^n + (x-x^2)^n)/2
    for n, x in itertools.product(degrees, FAMILY_X):
        lhs = pf.shah_F(2, 1, 2, [], [F(1, 2)], x, n)
        rhs = ((x + x * x) ** n + (x - x * x) ** n) / 2
        t.exact(dict(chain="block2", n=n, x=x), lhs, rhs)
    t.note("chains: Jacobi and Rice reductions (m = 1) plus an m = 2 block check against a binomial closed form")


def _run_chebyshev(t: _Tally, scale: str, seed: int) -> None:
    top = _pick(scale, 6, 15, 25)
    points = _pick(scale, 11, 21, 41)
    xs = [-1.0 + 2.0 * i / (points - 1) for i in range(points)]
    worst = 0.0
    for n in range(top + 1):
        # 2 Gamma(n+3/2)/((n+1)! sqrt(pi)) = Gamma(n+3/2)/((n+1)! Gamma(3/2)) = (3/2)_n/(n+1)!
        coeff = float(pochhammer(F(3, 2), n) / factorial(n + 1))
        for x in xs:
            p = pf.jacobi_real(n, F(1, 2), F(1, 2), x)
            worst = max(worst, t.close(dict(oracle="U", n=n, x=x), p, coeff * pf.chebyshev_u(n, x)))
            worst = max(worst, t.close(dict(oracle="C1", n=n, x=x), p, coeff * pf.gegenbauer(n, 1, x)))
    t.note(f"max |difference| {worst:.3e}")


KHAN_ALPHAS = (F(0), F(1, 2), F(1), F(5, 2))
KHAN_X = (F(0), F(1, 4), F(1, 2), F(1), F(-2, 3))


def _run_khan_integral(t: _Tally, scale: str, seed: int) -> None:
    for n, a, x in itertools.product(_degrees(scale, 10), KHAN_ALPHAS, KHAN_X):
        lhs = ang.khan_gamma_integral_lhs(n, a, x)
        t.exact(dict(n=n, alpha=a, x=x), lhs, _jacobi_scaled(n, a, a, 1 - 2 * x))
    t.note("f_n(1, 2alpha+1; -; -; xt) read as lambda = mu = 2alpha+1; t^k integrates to (alpha+1/2)_k")


# ---------------------------------------------------------------------------
# I5, orthogonality: 3j engine and Koornwinder forms

def _koornwinder_grid(top: int):
    for N in range(top + 1):
        for a, b in itertools.product(range(4), repeat=2):
            for n, x in itertools.product(range(N + 1), repeat=2):
                yield n, x, a, b, N


def _run_threej_koornwinder(t: _Tally, scale: str, seed: int) -> None:
    mismatched_printed = total = 0
    for args in threej_configs(_pick(scale, 4, 9, 11)):
        t.exact(_threej_inputs(args), ang.threej(args), ang.threej_racah(args))
        total += 1
        mismatched_printed += ang.threej(args, as_printed=True) != ang.threej_racah(args)
    t.note(
        f"3j: 3F2 path with phase (-1)^(j1-j2-m3) and factor (j3-m3)! matches Racah on {total} cases; "
        f"the printed prefactor disagrees on {mismatched_printed}"
    )

    tally = {"first": 0, "second": 0, "second_bare": 0, "printed": 0, "printed_bare": 0}
    cases = 0
    for n, x, a, b, N in _koornwinder_grid(_pick(scale, 3, 6, 8)):
        inputs = dict(form="first", n=n, x=x, alpha=a, beta=b, N=N)
        cases += 1
        tally["first"] += t.exact(inputs, ang.cg_from_hahn_first(n, x, a, b, N),
                                  ang.clebsch(ang.koornwinder_first_labels(n, x, a, b, N)))
        target = ang.clebsch(ang.koornwinder_second_labels(n, x, a, b, N))
        inputs = dict(inputs, form="second")
        tally["second"] += t.exact(inputs, ang.cg_from_hahn_second(n, x, a, b, N), target)
        tally["second_bare"] += ang.cg_from_hahn_second(n, x, a, b, N, factorial_reading=False) == target
        printed_target = ang.clebsch(ang.koornwinder_second_labels_printed(n, x, a, b, N))
        for reading, key in ((True, "printed"), (False, "printed_bare")):
            value = ang.cg_from_hahn_second(n, x, a, b, N, factorial_reading=reading, as_printed=True)
            tally[key] += value == printed_target
    t.note(f"Koornwinder first form: {tally['first']}/{cases} exact")
    t.note(
        "Koornwinder second form, labels a=(N+alpha)/2, alpha'=a-x, b=(N+beta)/2, beta'=(beta-N)/2+x, "
        f"c=N-n+(alpha+beta)/2, gamma=(alpha+beta)/2: factorial reading {tally['second']}/{cases}, "
        f"bare reading {tally['second_bare']}/{cases}; resolution: factorial"
    )
    t.note(
        "printed labels (gamma=(beta-alpha)/2) and printed radicand: "
        f"factorial reading {tally['printed']}/{cases}, bare reading {tally['printed_bare']}/{cases}"
    )


def _run_orthogonality(t: _Tally, scale: str, seed: int) -> None:
    top = _pick(scale, 4, 8, 10)
    for j1, j2, j3 in itertools.product(range(top + 1), repeat=3):
        if (j1 + j2 + j3) % 2 or not abs(j1 - j2) <= j3 <= j1 + j2:
            continue
        for m3 in range(-j3, j3 + 1, 2):
            total = Fraction(0)
            for m1 in range(-j1, j1 + 1, 2):
                m2 = -m1 - m3
                if abs(m2) <= j2:
                    args = ang.ThreeJArgs(*(HalfInt(v) for v in (j1, j2, j3, m1, m2, m3)))
                    total += ang.threej(args).square()
            inputs = dict(j1=HalfInt(j1), j2=HalfInt(j2), j3=HalfInt(j3), m3=HalfInt(m3))
            t.exact(inputs, (j3 + 1) * total, Fraction(1))


# ---------------------------------------------------------------------------
# I6: Weber-Erdelyi

def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3)))


def _run_weber_erdelyi(t: _Tally, scale: str, seed: int) -> None:
    rng = random.Random(seed)
    wanted = _pick(scale, 40, 200, 1000)
    accepted = rejected = printed_ok = 0
    while accepted < wanted:
        n = rng.randint(0, 10)
        a, b, c, d = (_random_rational(rng) for _ in range(4))
        try:
            original = hg.pfq_exact([-n, a, b], [c, d], 1)
            sides = []
            for transform in (hg.weber_erdelyi_first, hg.weber_erdelyi_second):
                prefactor, series = transform(n, a, b, c, d)
                sides.append(prefactor * series.evaluate())
        except PoleError:
            rejected += 1
            continue
        accepted += 1
        inputs = dict(n=n, alpha=a, beta=b, gamma=c, delta=d)
        t.exact(dict(inputs, transform="first"), sides[0], original)
        t.exact(dict(inputs, transform="second"), sides[1], original)
        try:
            prefactor, series = hg.weber_erdelyi_second_as_printed(n, a, b, c, d)
            printed_ok += prefactor * series.evaluate() == original
        except PoleError:
            pass
    t.note(f"random sets: {accepted} accepted, {rejected} rejected for poles (seed {seed})")
    t.note(f"second transform with third numerator gamma-delta-n: {printed_ok}/{accepted} preserve the value")

    configs = 0
    for args in threej_configs(_pick(scale, 3, 6, 8)):
        configs += 1
        want = ang.threej(args)
        for name, transform in (("first", hg.weber_erdelyi_first), ("second", hg.weber_erdelyi_second)):
            inputs = dict(_threej_inputs(args), transform=name)
            try:
                got = ang.threej(args, series=lambda a, tr=transform: ang.threej_3f2_transformed(a, tr))
            except DomainError as exc:
                t.error(inputs, exc)
                continue
            t.exact(inputs, got, want)
    t.note(
        f"inside the 3j ({configs} configurations): -n = m1-j1, alpha = -j1-j2-j3-1, beta = j3-j1-j2, "
        "gamma = -2j1, delta = -j1-j2-m3"
    )


# ---------------------------------------------------------------------------
# I7: Rajeswari substitutions

def _run_rajeswari(t: _Tally, scale: str, seed: int) -> None:
    top = _pick(scale, 3, 6, 8)
    for name, fn in (("first", ang.rajeswari_first), ("second", ang.rajeswari_second)):
        outside = printed_ok = printed_undefined = checked = 0
        for args in threej_configs(top):
            inputs = dict(_threej_inputs(args), identity=name)
            try:
                lhs, rhs = fn(args)
            except PoleError:
                outside += 1
                continue
            except DomainError as exc:
                t.error(inputs, exc)
                continue
            checked += 1
            t.exact(inputs, lhs, rhs)
            try:
                lhs_p, rhs_p = fn(args, as_printed=True)
                printed_ok += SqrtRational.from_rational(lhs_p) == rhs_p
            except (DomainError, AssertionError):
                printed_undefined += 1
        t.note(
            f"{name}: {checked} checked, {outside} outside the domain (Hahn parameter pole); "
            f"printed form: {printed_ok} agree, {printed_undefined} undefined"
        )
    t.note("both identities use N = 2j2 (first) and N = 2j1 (second) with Q_n(x; alpha, beta, N) = 3F2[..; -N, 1+alpha; 1]")


# ---------------------------------------------------------------------------
# I8: Hahn -> Jacobi limit

HAHN_LADDER = (50, 100, 200, 400)
HAHN_EXTENSION = (800, 1600, 3200)
HAHN_PAIRS = ((F(0), F(0)), (F(1), F(1, 2)))
RATIO_BAND = (0.4, 0.62)


def _run_hahn_jacobi(t: _Tally, scale: str, seed: int) -> None:
    for n, (a, b), x in itertools.product(range(6), HAHN_PAIRS, (F(1, 4), F(1, 2))):
        t.cases += 1
        limit = _jacobi_scaled(n, a, b, 1 - 2 * x)
        errors = [abs(pf.hahn(n, N * x, a, b, N) - limit) for N in HAHN_LADDER]
        inputs = dict(n=n, alpha=a, beta=b, x=x)
        if all(e == 0 for e in errors):
            continue
        ratios = [float(errors[i + 1] / errors[i]) if errors[i] else math.inf for i in range(len(errors) - 1)]
        if not all(RATIO_BAND[0] <= r <= RATIO_BAND[1] for r in ratios):
            t.fail(inputs, "ratios " + " ".join(f"{r:.6f}" for r in ratios),
                   f"each in [{RATIO_BAND[0]}, {RATIO_BAND[1]}]", float(errors[-1]))
            signed = [pf.hahn(n, N * x, a, b, N) - limit for N in HAHN_LADDER + HAHN_EXTENSION]
            tail = [float(signed[i + 1] / signed[i]) for i in range(len(signed) - 1)]
            t.note(
                f"n={n} alpha={a} beta={b} x={render(x)}: signed error ratios over N = "
                f"{list(HAHN_LADDER + HAHN_EXTENSION)} are " + " ".join(f"{r:.4f}" for r in tail)
                + "; the 1/N term is small here, so 1/N^2 dominates and the error changes sign before the halving regime"
            )
    t.note(f"N ladder {list(HAHN_LADDER)}; cases with zero error at every N count as exact passes")


# ---------------------------------------------------------------------------
# I9-I11: d-functions and characters

def _run_wigner_d(t: _Tally, scale: str, seed: int) -> None:
    top = _pick(scale, 6, 15, 21)
    worst_sum = worst_unit = 0.0
    for tw in range(top + 1):
        j = HalfInt(tw)
        ms = list(range(-tw, tw + 1, 2))
        for theta in THETAS:
            rows = {}
            for m in ms:
                row = []
                for k in ms:
                    got = ang.wigner_d(j, HalfInt(m), HalfInt(k), theta)
                    want = ang.wigner_d_sum(j, HalfInt(m), HalfInt(k), theta)
                    diff = t.close(dict(j=j, m=HalfInt(m), k=HalfInt(k), theta=theta), got, want)
                    worst_sum = max(worst_sum, diff)
                    row.append(got)
                rows[m] = row
            for m, mp in itertools.combinations_with_replacement(ms, 2):
                dot = math.fsum(x * y for x, y in zip(rows[m], rows[mp]))
                inputs = dict(check="unitarity", j=j, m=HalfInt(m), mp=HalfInt(mp), theta=theta)
                worst_unit = max(worst_unit, t.close(inputs, dot, 1.0 if m == mp else 0.0, UNITARITY_TOL))
    t.note(f"max |d - d_sum| {worst_sum:.3e}; max unitarity residual {worst_unit:.3e}")
    t.note("normalisation factor read as s!(s+mu+nu)!/((s+mu)!(s+nu)!)")


def _spread(values: list[float]) -> float:
    mean = math.fsum(values) / len(values)
    return (max(values) - min(values)) / abs(mean)


def _run_character(t: _Tally, scale: str, seed: int) -> None:
    constants, printed = [], []
    for tw in range(_pick(scale, 4, 8, 12) + 1):
        j = HalfInt(tw)
        closed = [ang.character_closed(j, w) for w in OMEGAS]
        ratios = [ang.character(j, w) / c for w, c in zip(OMEGAS, closed)]
        ratios_p = [ang.character(j, w, as_printed=True) / c for w, c in zip(OMEGAS, closed)]
        t.cases += 1
        spread = _spread(ratios)
        if spread > SPREAD_TOL:
            t.fail(dict(j=j), f"spread {spread:.3e}", f"<= {SPREAD_TOL}", spread)
        constants.append(f"j={j}: {ratios[0]:.15g}")
        printed.append(f"j={j}: {ang.character_prefactor(j, as_printed=True) / ang.character_prefactor(j)}"
                       f" (spread {_spread(ratios_p):.1e})")
    t.note("character/character_closed per j: " + ", ".join(constants))
    t.note("with prefactor (4j-2)!!/(2(4j+1)!!): " + ", ".join(printed))


def _run_gen_character(t: _Tally, scale: str, seed: int) -> None:
    for tw in range(_pick(scale, 4, 6, 10) + 1):
        j = HalfInt(tw)
        for lam in range(tw + 1):
            for w in OMEGAS:
                inputs = dict(j=j, lam=lam, omega=w)
                got = ang.gen_character(j, lam, w)
                t.close(dict(inputs, check="jacobi"), got, ang.gen_character_jacobi(j, lam, w))
                if lam == 0:
                    t.close(dict(inputs, check="lambda0"), got, ang.character(j, w))


# ---------------------------------------------------------------------------
# registry

def _suite(id_, description, grid, comparison, run) -> IdentitySuite:
    return IdentitySuite(id_, description, grid, comparison, run)


_REGISTRY: tuple[IdentitySuite, ...] = (
    _suite("I1_khan_jacobi",
           "Khan f_n(1, 1+a+b, 1+2a; a+1/2; -; (1-x)/2) (1+a)_n/n! equals P_n^(a,b)(x)",
           {"default": "n 1..12, alpha, beta in {0,1/2,1,2,7/3}, x in {0,1,1/2,-1/3,2/5}",
            "small": "n 1..4", "large": "n 1..20"},
           "exact", _run_khan_jacobi),
    _suite("I2_jain_jacobi",
           "Jain J_n with c = 1+a+b, k = 2 reduces to (1+a+b)_n/(1+a)_n P_n^(a,b)(1-2x)",
           {"default": "as I1", "small": "n 1..4", "large": "n 1..20"},
           "exact", _run_jain_jacobi),
    _suite("I3_shah",
           "Shah F reduces to n!/(1+a)_n P_n^(a,b)(1-2x) and to the generalized Rice polynomial",
           {"default": "as I1, (xi, p) in {(2,3), (3/2,5/2)}", "small": "n 1..4", "large": "n 1..20"},
           "exact", _run_shah),
    _suite("I4_chebyshev_gegenbauer",
           "P_n^(1/2,1/2)(x) = (3/2)_n/(n+1)! U_n(x) = (3/2)_n/(n+1)! C_n^(1)(x)",
           {"default": "n 0..15, 21 points in [-1, 1]", "small": "n 0..6, 11 points",
            "large": "n 0..25, 41 points"},
           f"float({FLOAT_TOL})", _run_chebyshev),
    _suite("I5_threej_koornwinder",
           "3j via 3F2 against the Racah sum; both Koornwinder CG-Hahn forms against the 3j CG",
           {"default": "j_i <= 9/2; N <= 6, alpha, beta <= 3", "small": "j_i <= 2; N <= 3",
            "large": "j_i <= 11/2; N <= 8"},
           "exact", _run_threej_koornwinder),
    _suite("I6_weber_erdelyi",
           "Both unit-argument 3F2 transforms on random pole-free parameters and inside the 3j",
           {"default": "200 random sets, n <= 10; j_i <= 3", "small": "40 sets; j_i <= 3/2",
            "large": "1000 sets; j_i <= 4"},
           "exact", _run_weber_erdelyi),
    _suite("I7_rajeswari",
           "Both 3j-Hahn substitution identities",
           {"default": "j_i <= 3", "small": "j_i <= 3/2", "large": "j_i <= 4"},
           "exact", _run_rajeswari),
    _suite("I8_hahn_jacobi",
           "Q_n(Nx; a, b, N) -> n!/(1+a)_n P_n^(a,b)(1-2x) with error halving as N doubles",
           {"default": "n 0..5, (a,b) in {(0,0),(1,1/2)}, x in {1/4,1/2}, N in 50..400",
            "small": "as default", "large": "as default"},
           f"ratio band {RATIO_BAND}", _run_hahn_jacobi),
    _suite("I9_wigner_d",
           "d^j_mk via Jacobi polynomials against the classical sum, plus row orthonormality",
           {"default": "j <= 15/2, six angles", "small": "j <= 3", "large": "j <= 21/2"},
           f"float({FLOAT_TOL}; unitarity {UNITARITY_TOL})", _run_wigner_d),
    _suite("I10_character",
           "character/character_closed is independent of omega",
           {"default": "2j <= 8, 12 angles", "small": "2j <= 4", "large": "2j <= 12"},
           f"ratio-constancy({SPREAD_TOL})", _run_character),
    _suite("I11_gen_character",
           "Generalized character: 2F1 form equals Jacobi form; lambda = 0 equals the character",
           {"default": "2j <= 6, all lambda, 12 angles", "small": "2j <= 4", "large": "2j <= 10"},
           f"float({FLOAT_TOL})", _run_gen_character),
    _suite("I12_khan_integral",
           "Khan's Gamma integral equals n!/(1+a)_n P_n^(a,a)(1-2x)",
           {"default": "n 1..10, alpha in {0,1/2,1,5/2}, x in {0,1/4,1/2,1,-2/3}",
            "small": "n 1..4", "large": "n 1..18"},
           "exact", _run_khan_integral),
    _suite("threej_orthogonality",
           "sum over m1, m2 at fixed m3 of (2j3+1) (3j)^2 equals 1",
           {"default": "j_i <= 4", "small": "j_i <= 2", "large": "j_i <= 5"},
           "exact", _run_orthogonality),
)


def list_suites() -> list[IdentitySuite]:
    return list(_REGISTRY)


def get_suite(suite_id: str) -> IdentitySuite:
    for suite in _REGISTRY:
        if suite.id == suite_id:
            return suite
    raise SuiteNotFoundError(f"no suite named {suite_id!r}")


def run_suite(suite_id: str, scale: str = "default", seed: int = 0) -> IdentityReport:
    suite = get_suite(suite_id)
    if scale not in SCALES:
        raise DomainError(f"scale must be one of {SCALES}, got {scale!r}")
    tally = _Tally()
    start = time.perf_counter()
    suite.run(tally, scale, seed)
    elapsed = time.perf_counter() - start
    return IdentityReport(
        suite=suite.id,
        passed=not tally.failures,
        cases_run=tally.cases,
        failures=tally.failures,
        wall_time_s=round(elapsed, 3),
        notes="\n".join(tally.notes),
    )


def run_all(scale: str = "default", seed: int = 0) -> list[IdentityReport]:
    return [run_suite(s.id, scale, seed) for s in _REGISTRY]
