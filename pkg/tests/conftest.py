from fractions import Fraction

import pytest
from hypothesis import strategies as st

from celine.exact import HalfInt, SqrtRational


def rationals(num=9, den=(1, 2, 3, 4, 5, 6)):
    return st.builds(Fraction, st.integers(-num, num), st.sampled_from(den))


def sqrt_rationals():
    nonzero = st.builds(
        SqrtRational,
        st.sampled_from((-1, 1)),
        st.builds(Fraction, st.integers(1, 50), st.integers(1, 50)),
    )
    return st.one_of(st.just(SqrtRational.zero()), nonzero)


@pytest.fixture
def H():
    """HalfInt from a value (not a twice-value): H(1/2) is spin one half."""
    return HalfInt.of


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
