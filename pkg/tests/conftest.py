import pytest

from cavityspin.model import CavityGeometry, QuantumNumbers
from cavityspin.solver import solve_eigenstate


@pytest.fixture(scope="session")
def reference_geometry():
    return CavityGeometry.from_nm_mev(8.0, 4.0, 10.0)


@pytest.fixture(scope="session")
def ground_state(reference_geometry):
    return solve_eigenstate(reference_geometry, QuantumNumbers(1, 0, 1))


@pytest.fixture(scope="session")
def excited_state(reference_geometry):
    return solve_eigenstate(reference_geometry, QuantumNumbers(2, 0, 1))


@pytest.fixture(scope="session")
def l1_state(reference_geometry):
    return solve_eigenstate(reference_geometry, QuantumNumbers(1, 1, 1))


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line per acceptance criterion; printed in the terminal summary."""
    def report(tag: str, ok: bool, detail: str) -> bool:
        line = f"{'PASS' if ok else 'FAIL'}  {tag}: {detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
