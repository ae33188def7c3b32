import os

import pytest
from hypothesis import HealthCheck, settings

from supero.lattice import Shape, Weight

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("SUPERO_EXAMPLES", "60")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

GL31 = Shape(3, 1)
GL22 = Shape(2, 2)

# lines printed by the acceptance tests, shown at the end of the run
ACCEPTANCE_LINES = {}


def w(text: str) -> Weight:
    return Weight.parse(text)


@pytest.fixture
def acceptance_line():
    def record(number: int, ok: bool, message: str, variant: str = "") -> str:
        label = f"{number} ({variant})" if variant else str(number)
        line = f"criterion {label}: {'PASS' if ok else 'FAIL'} {message}"
        ACCEPTANCE_LINES[(number, variant)] = line
        print(line)
        return line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
