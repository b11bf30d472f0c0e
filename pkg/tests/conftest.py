"""Shared fixtures and the acceptance summary printer."""

from __future__ import annotations

import pytest

from triforge.lps import build_lps

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def x17_5():
    return build_lps(17, 5)


@pytest.fixture(scope="session")
def x5_13():
    return build_lps(5, 13)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
