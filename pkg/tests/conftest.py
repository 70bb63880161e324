import itertools
from collections import defaultdict
from fractions import Fraction

import pytest

from jacklr import jack


@pytest.fixture
def isolated_store():
    """Let a test install its own expansion store without evicting the shared one."""
    saved_store, saved_degrees = jack._store, dict(jack._degree_cache)
    yield
    jack._store = saved_store
    jack._degree_cache.clear()
    jack._degree_cache.update(saved_degrees)


def explicit_monomial(lam, nvars):
    """m_lam as {exponent vector: 1} by brute-force permutation of the padded parts."""
    padded = tuple(lam) + (0,) * (nvars - len(lam))
    return {e: Fraction(1) for e in set(itertools.permutations(padded))}


def explicit_mul(f, g):
    out = defaultdict(Fraction)
    for a, x in f.items():
        for b, y in g.items():
            out[tuple(i + j for i, j in zip(a, b))] += x * y
    return {e: c for e, c in out.items() if c}


def explicit_to_mono(poly):
    """Read monomial-basis coefficients off an explicit symmetric polynomial."""
    out = {}
    for e, c in poly.items():
        if list(e) == sorted(e, reverse=True):
            out[tuple(v for v in e if v)] = c
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
