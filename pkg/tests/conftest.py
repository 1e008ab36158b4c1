import math

import pytest

from dressedpdc import MatrixElementModel, PumpConfig, TransitionSpec, load_scenario, superposition

# Reference-scenario values computed independently of the package:
# E_p = sqrt(8 pi * 1e3 W/cm^2 * 1e7 / c), rabi = 2 * 1e-17 * E_p / hbar.
REF_FIELD = 2.8954067223460553  # statV/cm
REF_RABI = 5.49115133871638e10  # rad/s


@pytest.fixture(scope="session")
def paper():
    return load_scenario("paper_s3")


@pytest.fixture
def transition():
    return TransitionSpec.from_wavelength(1e-4, 1e-17, 3e-8, 2.5e19)


@pytest.fixture
def pump(transition):
    return PumpConfig.from_intensity(transition, 2 * math.pi * 1e10, 1e3)


@pytest.fixture
def balanced():
    return superposition(1, 1)


@pytest.fixture
def model():
    return MatrixElementModel.small_argument(3e-8)


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the summary is printed at the end of the run."""

    def record(label, ok, detail):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
