import pytest

from hh1solve import catalog
from hh1solve.groups import Group


def wreath_c3_c3():
    """Sylow 3-subgroup of S_9: a 3-cycle on the first block and the block rotation."""
    return Group.from_permutations(9, [(1, 2, 0, 3, 4, 5, 6, 7, 8), (3, 4, 5, 6, 7, 8, 0, 1, 2)])


# 3-groups of order <= 81 used by the theorem, layering and transfer suites
THREE_GROUPS = {
    "C3": lambda: catalog.cyclic(3),
    "C9": lambda: catalog.cyclic(9),
    "C27": lambda: catalog.cyclic(27),
    "C3xC3": lambda: catalog.elem_ab(3, 2),
    "C9xC3": lambda: catalog.product(catalog.cyclic(9), catalog.cyclic(3)),
    "C3^3": lambda: catalog.elem_ab(3, 3),
    "UT33": lambda: catalog.heisenberg(3),
    "M27": lambda: catalog.modular(3),
    "C9xC9": lambda: catalog.product(catalog.cyclic(9), catalog.cyclic(9)),
    "C27xC3": lambda: catalog.product(catalog.cyclic(27), catalog.cyclic(3)),
    "UT33xC3": lambda: catalog.product(catalog.heisenberg(3), catalog.cyclic(3)),
    "M27xC3": lambda: catalog.product(catalog.modular(3), catalog.cyclic(3)),
    "C9:C9": catalog.c9_rtimes_c9,
    "M81": lambda: catalog.metacyclic(27, 3, 10),
    "C3wrC3": wreath_c3_c3,
}

_built = {}


def three_group(name):
    if name not in _built:
        _built[name] = THREE_GROUPS[name]()
    return _built[name]


@pytest.fixture(params=sorted(THREE_GROUPS))
def pgroup3(request):
    return three_group(request.param)


# acceptance criteria register one line each here; printed at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
