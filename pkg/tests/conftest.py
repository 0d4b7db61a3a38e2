import random

import pytest

from cyclodft import build_plan, make_field

# degree -> primitive polynomial used for the property sweeps
SWEEP = {2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 8: 0x11D}


@pytest.fixture(scope="session")
def gf8():
    return make_field(3, 0xB)


@pytest.fixture(scope="session")
def gf16():
    return make_field(4, 0x13)


@pytest.fixture(scope="session")
def plan7(gf8):
    return build_plan(gf8, "paper", {3: gf8.exp(3)})


@pytest.fixture(scope="session")
def plan15(gf16):
    return build_plan(gf16, "paper", {4: gf16.exp(3), 2: gf16.exp(5)})


_plans = {}


def sweep_plan(m):
    if m not in _plans:
        _plans[m] = build_plan(make_field(m, SWEEP[m]))
    return _plans[m]


def random_vector(rng: random.Random, n: int):
    return [rng.randrange(n + 1) for _ in range(n)]


ACCEPTANCE_LINES = []


def record_acceptance(number, title, passed, detail=""):
    status = "PASS" if passed else "FAIL"
    ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
