import pytest

_acceptance_lines = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; call ``criterion(ok, detail)`` once."""
    name = request.node.name

    def record(ok, detail=""):
        _acceptance_lines.append(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip())
        print(_acceptance_lines[-1])
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
