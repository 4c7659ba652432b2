import pytest

SIGMA1 = [2, 8, 4, 9, 5, 1, 7, 6, 3]

_acceptance_lines: list[str] = []


@pytest.fixture
def sigma1():
    return list(SIGMA1)


@pytest.fixture
def report_criterion():
    """Record a one-line verdict that is echoed in the terminal summary."""
    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        _acceptance_lines.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
