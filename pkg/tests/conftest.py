import pytest

_LINES: list[str] = []


@pytest.fixture
def record():
    """Log one ``PASS``/``FAIL`` line per acceptance criterion, printed at the end of the run."""

    def log(number: int, title: str, failures: list[str], detail: str = "") -> None:
        status = "FAIL" if failures else "PASS"
        line = f"{status} criterion {number:>2}: {title}"
        if detail:
            line += f" [{detail}]"
        if failures:
            line += f"  first failure: {failures[0]}"
        _LINES.append(line)
        print(line)

    return log


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
