from functools import lru_cache

import pytest

from spinmult import build_context, enumerate_weight_counts

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def _counts(parts):
    return enumerate_weight_counts(build_context(parts))


@pytest.fixture(scope="session")
def weight_counts():
    """Oracle weight map for a composition, cached for the whole run."""
    return lambda parts: _counts(tuple(parts))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
