import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from celine.exact import DomainError, NonTerminatingError, PoleError, pochhammer, factorial
from celine.hypergeom import (
    HypSeries,
    cancel_params,
    param_set,
    pfq_exact,
    pfq_real,
    series_coefficients,
    termination_index,
    weber_erdelyi_first,
    weber_erdelyi_second,
    weber_erdelyi_second_as_printed,
)

from conftest import rationals


def direct_sum(top, bottom, x, n):
    """Term-by-term oracle, no cancellation and no recurrence."""
    total = F(0)
    for k in range(n + 1):
        num = F(1)
        for a in top:
            num *= pochhammer(a, k)
        den = factorial(k)
        for b in bottom:
            den *= pochhammer(b, k)
        total += num / den * F(x) ** k
    return total


def test_termination_index():
    assert termination_index([-3, F(5, 2)]) == 3
    assert termination_index([-7, -2, F(1, 2)]) == 2
    with pytest.raises(NonTerminatingError):
        termination_index([F(1, 2), 3])


def test_pfq_exact_examples():
    assert pfq_exact([-2, 1], [1], 0) == 1
    assert pfq_exact([-1, 3], [2], F(1, 2)) == F(1, 4)
    assert pfq_exact([-2, 2], [F(1, 2)], 1) == direct_sum([-2, 2], [F(1, 2)], 1, 2) == 1


def test_pfq_exact_pole_and_nontermination():
    with pytest.raises(PoleError):
        pfq_exact([-3, 1], [-1], 1)
    # -N below the termination point is legal
    assert pfq_exact([-2, 1], [-5], 1) == direct_sum([-2, 1], [-5], 1, 2)
    with pytest.raises(NonTerminatingError):
        pfq_exact([F(1, 2)], [1], F(1, 3))


def test_cancellation_keeps_original_length():
    # (-2, -2) cancels, yet the series still stops at k = 2
    assert pfq_exact([-2, 3], [-2], 1) == 1 + 3 + F(3 * 4, 2)
    assert cancel_params([1, 2, 2], [2, 5]) == ([1, 2], [5])


def test_cancellation_avoids_zero_over_zero():
    # a -4 upstairs against -4 downstairs with an earlier -1 witness
    assert pfq_exact([-1, -4, 7], [-4, 2], F(1, 3)) == 1 - F(7, 6)


def test_pfq_real_examples():
    assert pfq_real([-3, 1], [2], 0.0) == 1.0
    assert pfq_real([-1, 3], [2], 0.5) == 0.25
    exact = pfq_exact([-2, 2], [F(3, 2)], 1)
    assert pfq_real([-2, 2], [F(3, 2)], 1.0) == pytest.approx(float(exact), rel=1e-14)


def test_pfq_real_rejects_nonfinite():
    with pytest.raises(DomainError):
        pfq_real([-1], [], float("nan"))


@settings(max_examples=60)
@given(st.integers(0, 30), st.lists(rationals(), min_size=1, max_size=3), rationals(), st.data())
def test_pfq_real_matches_exact(n, top, x, data):
    bottom = data.draw(st.lists(rationals().filter(lambda b: b > 0), min_size=1, max_size=2))
    exact = pfq_exact([-n, *top], bottom, x)
    xf = float(x)
    if F(xf) != x:
        exact = pfq_exact([-n, *top], bottom, F(xf))
    assert pfq_real([-n, *top], bottom, xf) == pytest.approx(float(exact), rel=1e-13, abs=1e-300)


def test_param_set():
    assert param_set(1, -5) == [-5]
    assert param_set(2, 1) == [F(1, 2), 1]
    assert param_set(3, 2) == [F(2, 3), 1, F(4, 3)]
    with pytest.raises(DomainError):
        param_set(0, 1)


@settings(max_examples=50)
@given(st.integers(0, 8), st.lists(rationals(), min_size=1, max_size=3),
       st.lists(rationals().filter(lambda b: b > 0), min_size=1, max_size=3), rationals(), st.randoms())
def test_permutation_invariance(n, top, bottom, x, rnd):
    value = pfq_exact([-n, *top], bottom, x)
    shuffled_top, shuffled_bottom = [-n, *top], list(bottom)
    rnd.shuffle(shuffled_top)
    rnd.shuffle(shuffled_bottom)
    assert pfq_exact(shuffled_top, shuffled_bottom, x) == value


@settings(max_examples=50)
@given(st.integers(0, 8), st.lists(rationals(), max_size=2),
       st.lists(rationals().filter(lambda b: b > 0), max_size=2),
       rationals().filter(lambda c: c > 0), rationals())
def test_cancellation_invariance(n, top, bottom, common, x):
    plain = pfq_exact([-n, *top], bottom, x)
    assert pfq_exact([-n, *top, common], [*bottom, common], x) == plain
    assert plain == direct_sum([-n, *top], bottom, x, n)


def test_series_coefficients_match_direct_terms():
    top, bottom = [-4, F(1, 3), F(-5, 2)], [F(7, 4)]
    partial = [direct_sum(top, bottom, 1, k) for k in range(5)]
    expected = [partial[0]] + [partial[k] - partial[k - 1] for k in range(1, 5)]
    assert series_coefficients(top, bottom) == expected


def test_hyp_series_type():
    s = HypSeries([-1, 3], [2], F(1, 2))
    assert s.evaluate() == F(1, 4)
    assert s.at(0.5).evaluate() == 0.25
    with pytest.raises(TypeError):
        HypSeries([-1, 0.5], [2])


def _check(transform, *params):
    n, a, b, c, d = params
    prefactor, series = transform(*params)
    return prefactor * series.evaluate() == pfq_exact([-n, a, b], [c, d], 1)


@pytest.mark.parametrize("params", [
    (0, F(2), F(3), F(5), F(7)),
    (1, F(1), F(1, 2), F(2), F(3)),
    (3, F(-1, 2), F(2), F(5, 2), F(7, 3)),
])
def test_weber_erdelyi_first(params):
    assert _check(weber_erdelyi_first, *params)


@pytest.mark.parametrize("params", [
    (0, F(2), F(3), F(5), F(7)),
    (2, F(1), F(1), F(3), F(4)),
    (4, F(3, 2), F(-1, 2), F(2), F(5, 2)),
])
def test_weber_erdelyi_second(params):
    assert _check(weber_erdelyi_second, *params)
    prefactor, _ = weber_erdelyi_second(*params)
    if params[0] == 0:
        assert prefactor == 1


@pytest.mark.parametrize("params", [(2, F(1), F(1), F(3), F(4)), (4, F(3, 2), F(-1, 2), F(2), F(5, 2))])
def test_weber_erdelyi_second_printed_numerator_breaks(params):
    assert not _check(weber_erdelyi_second_as_printed, *params)


def test_weber_erdelyi_pole():
    with pytest.raises(PoleError):
        weber_erdelyi_first(3, F(1), F(1), F(-1), F(2))
    # beta = 0 stops the original series at once, but (delta)_5 = 0 still
    with pytest.raises(PoleError):
        weber_erdelyi_first(5, F(7, 3), F(0), F(-7), F(-2))
    with pytest.raises(PoleError):
        weber_erdelyi_second(5, F(7, 3), F(0), F(-7), F(-2))


def test_weber_erdelyi_random_grid():
    rng = random.Random(7)
    done = 0
    while done < 200:
        n = rng.randint(0, 10)
        a, b, c, d = (F(rng.randint(-9, 9), rng.choice((1, 2, 3))) for _ in range(4))
        try:
            ok = _check(weber_erdelyi_first, n, a, b, c, d) and _check(weber_erdelyi_second, n, a, b, c, d)
        except PoleError:
            continue
        assert ok, (n, a, b, c, d)
        done += 1
