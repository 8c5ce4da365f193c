"""Shared pytest hooks.

The acceptance tests record one checklist line apiece; echoing them from a
terminal-summary hook keeps them visible under default output capture.
"""

acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.section("acceptance checklist")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
