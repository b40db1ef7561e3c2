import pytest

from pinilot import named
from pinilot.corpus import CorpusConfig, builtin_corpus

ACCEPTANCE_LINES = []


def record_acceptance(number, passed, detail):
    ACCEPTANCE_LINES.append((number, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {detail}")


@pytest.fixture(scope="session")
def S3():
    return named.symmetric(3)


@pytest.fixture(scope="session")
def S4():
    return named.symmetric(4)


@pytest.fixture(scope="session")
def A4():
    return named.alternating(4)


@pytest.fixture(scope="session")
def G75():
    return named.c5c5_rtimes_c3()


@pytest.fixture(scope="session")
def A5C5():
    return named.a5_times_c5()


@pytest.fixture(scope="session")
def corpus():
    return builtin_corpus(CorpusConfig())


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """Corpus groups of order <= 100."""
    return [G for G in corpus if G.order <= 100]


@pytest.fixture(scope="session")
def tiny_corpus(corpus):
    """Groups whose lattice is small enough for quadratic sweeps in tests."""
    from pinilot.lattice import all_subgroups

    return [G for G in corpus if G.order <= 60 and len(all_subgroups(G)) <= 60]
