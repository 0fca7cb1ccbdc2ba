"""Shared fixtures and strategies for the test suite."""

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from probsyll import Event, ConditionalEvent, Figure, canonical_family


def A():
    return Event.atom("A")


def B():
    return Event.atom("B")


def C():
    return Event.atom("C")


@pytest.fixture(scope="session")
def families():
    """The five three-event families used throughout the golden tests."""
    a, b, c = A(), B(), C()
    return {
        "fig1_triple": (ConditionalEvent(c, b), ConditionalEvent(b, a),
                        ConditionalEvent(c, a)),
        "fig1_premise": canonical_family(Figure.I)[0],
        "fig2_triple": (ConditionalEvent(b, c), ConditionalEvent(~b, a),
                        ConditionalEvent(~c, a)),
        "fig2_premise": canonical_family(Figure.II)[0],
        "fig3_premise": canonical_family(Figure.III)[0],
    }


# One line per acceptance criterion, echoed after the test summary so the
# pass/fail status of each criterion is visible in captured runs.
criterion_lines = []


def pytest_terminal_summary(terminalreporter):
    if criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in criterion_lines:
            terminalreporter.write_line(line)


@st.composite
def unit_fractions(draw, max_denominator=24):
    """Exact rationals in [0, 1] with small denominators."""
    den = draw(st.integers(min_value=1, max_value=max_denominator))
    num = draw(st.integers(min_value=0, max_value=den))
    return Fraction(num, den)


@st.composite
def unit_triples(draw, max_denominator=24):
    return tuple(draw(unit_fractions(max_denominator)) for _ in range(3))
