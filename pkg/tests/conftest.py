import numpy as np
import pytest

from kleintc.cochains import Cochain, named
from kleintc.group import GroupElement
from kleintc.parity import t

RESIDUE_GRID = [GroupElement(k, l) for k in range(4) for l in range(2)]


def matrix(g):
    """Affine matrix of a^k b^l acting on the plane: b is a glide reflection, a a translation."""
    k, l = g
    return np.array([[1, 0, l], [0, (-1) ** (l % 2), k], [0, 0, 1]], dtype=np.int64)


def from_matrix(m):
    assert m[0, 0] == 1 and m[2].tolist() == [0, 0, 1] and m[0, 1] == 0 and m[1, 0] == 0
    return GroupElement(int(m[1, 2]), int(m[0, 2]))


def mutant_u():
    """u with the k2*l3 term dropped from its rule on <*||omega>."""

    def star(k, l):
        return k[0] * t(k[1]) * l[2] * k[2] + k[0] * (l[1] * k[2] + k[1]) * t(k[2])

    u = named("u")
    return Cochain("u~", 3, u.carrier, {**u.rules, list(u.rules)[0]: star})


@pytest.fixture
def corrupted_u():
    return mutant_u()


# ---- acceptance summary ----------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    _criteria[number] = (title, call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title}")
