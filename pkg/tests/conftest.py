import numpy as np
import pytest

from .helpers import CUBE_FACE, OCTANT


@pytest.fixture
def cube_face():
    return CUBE_FACE.copy()


@pytest.fixture
def octant():
    return OCTANT.copy()


@pytest.fixture
def rng():
    return np.random.default_rng(20121012)


# acceptance summary -----------------------------------------------------------

_ACCEPTANCE = []


@pytest.fixture
def acceptance_record():
    def record(number, name, passed, detail=""):
        line = f"criterion {number:>2} {'PASS' if passed else 'FAIL'}  {name}"
        if detail:
            line += f"  ({detail})"
        _ACCEPTANCE.append((number, line))
        print(line)
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_ACCEPTANCE, key=lambda x: x[0]):
        terminalreporter.write_line(line)
