import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    if oracles.ACCEPTANCE_REPORT:
        terminalreporter.section("acceptance criteria")
        for line in oracles.ACCEPTANCE_REPORT:
            terminalreporter.write_line(line)
