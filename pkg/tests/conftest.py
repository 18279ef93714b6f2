import pytest

from capfield.ffield import make_field


@pytest.fixture(scope="session")
def f81():
    return make_field(3, 4)


@pytest.fixture(scope="session")
def f243():
    return make_field(3, 5)


@pytest.fixture(scope="session")
def f729():
    return make_field(3, 6)


@pytest.fixture(scope="session")
def f64():
    return make_field(2, 6)


@pytest.fixture(scope="session")
def f256():
    return make_field(2, 8)


@pytest.fixture(scope="session")
def f16():
    return make_field(2, 4)


_ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture(scope="session")
def acceptance_log(request):
    return request.config.stash.setdefault(_ACCEPTANCE_KEY, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = config.stash.get(_ACCEPTANCE_KEY, None)
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for line in log:
        terminalreporter.write_line(line)
