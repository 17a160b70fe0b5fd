import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from clusterknot import fixtures
from clusterknot.decoration import assemble_solution, build_decoration

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile("ci")

GENERIC = (0.7 + 0.2j, 1.3 - 0.4j, 0.3 + 0.9j)


def cplx(lo=-3.0, hi=3.0):
    f = st.floats(lo, hi, allow_nan=False, allow_infinity=False)
    return st.builds(complex, f, f)


def nonzero_window():
    """Seven complex entries bounded away from zero."""
    return st.lists(cplx().filter(lambda z: abs(z) > 0.2), min_size=7, max_size=7)


@pytest.fixture(scope="session")
def d41():
    return fixtures.diagram()


@pytest.fixture(scope="session")
def rep41(d41):
    return fixtures.representation(d=d41)


@pytest.fixture(scope="session")
def dec41(d41, rep41):
    a, b, g = GENERIC
    return build_decoration(d41, rep41, (a, b), (g, 1), h_seed=(1, 0))


@pytest.fixture(scope="session")
def tuples41(d41, dec41):
    return assemble_solution(d41, dec41)


@pytest.fixture
def rng():
    return np.random.default_rng(7)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
