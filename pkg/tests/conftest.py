import pytest

from cyclicweights.code import code_params
from cyclicweights.ffield import make_field


@pytest.fixture(scope="session")
def gf9():
    return make_field(3, 2).ensure_tables()


@pytest.fixture(scope="session")
def gf25():
    return make_field(5, 2).ensure_tables()


@pytest.fixture(scope="session")
def gf81():
    return make_field(3, 4).ensure_tables()


@pytest.fixture(scope="session")
def small_code():
    """(q,m,h,e) = (5,2,4,4): r = 25, n = 24."""
    return code_params(5, 1, 2, 4, 4)


@pytest.fixture(scope="session")
def code81():
    """(q,m,h,e) = (9,2,4,4): r = 81, n = 40."""
    return code_params(3, 2, 2, 4, 4)


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line per acceptance criterion, shown in the terminal summary."""
    lines = request.config.stash.setdefault(ACCEPTANCE_KEY, [])

    def record(number, ok, detail):
        lines.append(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
        return ok

    return record


ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split(":")[0].split()[1])):
            terminalreporter.write_line(line)
