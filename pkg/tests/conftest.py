import pytest

_LINES = []


class Recorder:
    """Collects one PASS/FAIL line per acceptance criterion."""

    def record(self, label, passed, text):
        line = f"{'PASS' if passed else 'FAIL'}  [{label}] {text}"
        _LINES.append(line)
        print(line)
        return passed


@pytest.fixture(scope="session")
def acceptance():
    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
