import sys
from pathlib import Path

import pytest

from virtualcm.io import certificate_from_doc, complex_from_doc, context_from_doc, read_document

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES: list[str] = []


class Fixtures:
    def doc(self, name):
        return read_document(name)

    def complex(self, name):
        return complex_from_doc(read_document(name))

    def context(self, name):
        return context_from_doc(read_document(name))

    def cert(self, name):
        return certificate_from_doc(read_document(name))

    def order(self, name):
        k = self.complex(name)
        return [k.face(f) for f in read_document(name)["facets"]]


@pytest.fixture(scope="session")
def fx():
    return Fixtures()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
