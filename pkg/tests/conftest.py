"""Suite-wide pytest hooks.

The acceptance module records one line per criterion; echo them in the
terminal summary so a plain `pytest -v` run shows the verdicts without
needing -s.
"""

criterion_lines: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in criterion_lines:
            terminalreporter.write_line(line)
