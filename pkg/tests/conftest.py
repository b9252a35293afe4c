"""Shared fixtures: bundled pools and season fixtures, loaded once per session."""

from __future__ import annotations

import pytest

from clinchsim.datasets import builtin_dataset, fixture_path, load_dataset

# One line per acceptance criterion, echoed after the run summary so the
# pass/fail verdicts survive output capture.
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log() -> list[str]:
    return ACCEPTANCE_LINES


@pytest.fixture(scope="session")
def standard_pool():
    return builtin_dataset("standard")


@pytest.fixture(scope="session")
def small_margin_pool():
    return builtin_dataset("small_margin")


@pytest.fixture(scope="session")
def f1_2002():
    return load_dataset(fixture_path("f1-2002"))


@pytest.fixture(scope="session")
def gp125_1999():
    return load_dataset(fixture_path("gp125-1999"))


@pytest.fixture(scope="session")
def motogp_2020():
    return load_dataset(fixture_path("motogp-2020"))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
