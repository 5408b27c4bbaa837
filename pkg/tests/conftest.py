from __future__ import annotations

from pathlib import Path

import pytest

from orthoradial.fixtures import named_fixtures

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"

# acceptance lines recorded by test_acceptance, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURE_DIR


@pytest.fixture
def named():
    return named_fixtures()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
