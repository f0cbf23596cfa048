import pytest

acceptance_lines = []


@pytest.fixture
def criterion_report():
    """Record and print one PASS/FAIL line for an acceptance criterion."""

    def report(number, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
        acceptance_lines.append(line)
        print(line)
        assert ok, line

    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in sorted(acceptance_lines):
            terminalreporter.write_line(line)
