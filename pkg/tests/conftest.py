import sys

import pytest

from editdistort.strcore import Alphabet


@pytest.fixture
def dna():
    return Alphabet(tuple("ACGT"))


def pytest_terminal_summary(terminalreporter):
    for name, mod in list(sys.modules.items()):
        if name.endswith("test_acceptance") and getattr(mod, "RESULTS", None):
            terminalreporter.section("acceptance criteria")
            for line in mod.RESULTS:
                terminalreporter.write_line(line)
