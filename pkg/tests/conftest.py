import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from translucent import corpus  # noqa: E402


@pytest.fixture(scope="session")
def ex1():
    return corpus.get_entry("ex1-Lab").automaton


@pytest.fixture(scope="session")
def ex4():
    return corpus.get_entry("ex4-dfawntl").automaton


@pytest.fixture(scope="session")
def dyck():
    return corpus.get_entry("sfawtl-dyck").automaton


@pytest.fixture(scope="session")
def ex6():
    return corpus.get_entry("ex6-triple-union").automaton


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
