from fractions import Fraction as Fr

import pytest

from gtsp import TableauC

H = Fr(1, 2)


def tab(rows, primed):
    """Build a type C tableau from rows listed bottom-up (row 1 first)."""
    return TableauC(len(rows), [[Fr(x) for x in r] for r in rows], [[Fr(x) for x in r] for r in primed])


@pytest.fixture
def trivial():
    return tab([[-H], [-H, -3 * H]], [[-H], [-H, -3 * H]])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
