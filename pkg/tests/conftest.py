import pytest

from polytile.oracle import corpus_words, enumerate_fixed_polyominoes


@pytest.fixture(scope="session")
def corpus6():
    return corpus_words(6)


@pytest.fixture(scope="session")
def corpus7():
    return corpus_words(7)


@pytest.fixture(scope="session")
def shapes7():
    return enumerate_fixed_polyominoes(7)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS):
        terminalreporter.write_line(line)
