from __future__ import annotations

import sys

import pytest
from hypothesis import HealthCheck, settings

from varietylab import automata as au
from varietylab.algebra import syntactic_stamp

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def lang(regex: str, alphabet: str = "") -> au.Dfa:
    """Minimal DFA of a regex, optionally over a larger alphabet."""
    return au.compile(au.parse_regex(regex, tuple(alphabet)))


def stamp_of(regex: str, alphabet: str = ""):
    return syntactic_stamp(lang(regex, alphabet))


@pytest.fixture
def ab_star():
    return stamp_of("(ab)*")


def pytest_terminal_summary(terminalreporter):
    results = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
