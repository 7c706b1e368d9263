import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gfree.named import complete, cycle  # noqa: E402
from gfree.patterns import PatternSpec  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def audit_patterns() -> list[PatternSpec]:
    """The pattern set used by the exhaustive audits."""
    return [
        PatternSpec.single(complete(2), label="K2"),
        PatternSpec.single(complete(3), label="K3"),
        PatternSpec.single(complete(4), label="K4"),
        PatternSpec.single(cycle(4), label="C4"),
        PatternSpec.single(cycle(5), label="C5"),
        PatternSpec.all_two_regular(),
    ]


@pytest.fixture(scope="session")
def patterns():
    return audit_patterns()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
