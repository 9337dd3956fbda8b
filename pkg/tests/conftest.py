import sys

import pytest

from qubatch import Subspace, SubgroupSystem, build_code
from qubatch.batch import RecoveryPlan, build_batch_code
from qubatch.lattice import enumerate_subspaces

# G_1..G_7 of (Z_2)^3 in the order used by the reference tables
REF_Z2_ORDER = ("100", "010", "001", "101", "110", "011", "111")
# column order of the reference Z_3 x Z_3 tables
REF_Z3_ORDER = ("10", "01", "11", "12")

# rows g -> symbols, copied from the reference tables
TABLE_Z3 = {
    "00": (0, 0, 0, 0), "01": (1, 0, 1, 1), "02": (2, 0, 2, 2),
    "10": (0, 1, 2, 1), "11": (1, 1, 0, 2), "12": (2, 1, 1, 0),
    "20": (0, 2, 1, 2), "21": (1, 2, 2, 0), "22": (2, 2, 0, 1),
}
TABLE_Z2 = {
    "000": ("00", "00", "00", "00", "00", "00", "00"),
    "100": ("00", "10", "01", "10", "10", "01", "10"),
    "010": ("01", "00", "10", "01", "10", "10", "01"),
    "001": ("10", "01", "00", "10", "01", "10", "11"),
    "110": ("01", "10", "11", "11", "00", "11", "11"),
    "101": ("10", "11", "01", "00", "11", "11", "01"),
    "011": ("11", "01", "10", "11", "11", "00", "10"),
    "111": ("11", "11", "11", "01", "01", "01", "00"),
}


def system_from(gens, p):
    return SubgroupSystem.of([Subspace.from_string(g, p) for g in gens])


@pytest.fixture
def ref_z2_code():
    return build_code(system_from(REF_Z2_ORDER, 2))


@pytest.fixture
def ref_z3_code():
    return build_code(system_from(REF_Z3_ORDER, 3))


@pytest.fixture
def bc733():
    """Seven 1-dim subgroups of (Z_2)^3 in canonical order, three pairs."""
    spaces = enumerate_subspaces(3, 1, 2).subspaces
    return build_batch_code(SubgroupSystem.of(spaces), RecoveryPlan(((0, 1), (2, 3), (4, 5))))


@pytest.fixture
def bc633():
    spaces = enumerate_subspaces(3, 1, 2).subspaces[:6]
    return build_batch_code(SubgroupSystem.of(spaces), RecoveryPlan(((0, 1), (2, 3), (4, 5))))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        terminalreporter.write_line(results[num])
