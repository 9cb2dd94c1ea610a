import pytest

from cutspace import kernels

ACCEPTANCE_LINES = []

BACKENDS = kernels.available()


@pytest.fixture(params=BACKENDS)
def backend(request):
    with kernels.using(request.param):
        yield request.param


@pytest.fixture
def report():
    def _report(criterion, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f": {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
