import pytest
from hypothesis import settings

from radonflag import build_root_system

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def A2():
    return build_root_system("A2")


@pytest.fixture(scope="session")
def A3():
    return build_root_system("A3")


@pytest.fixture(scope="session")
def B2():
    return build_root_system("B2")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config._criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark and (rep.when == "call" or (rep.when == "setup" and rep.failed)):
        item.config._criteria.append((*mark.args, rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter, config):
    if not config._criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, secs in sorted(config._criteria):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  [{number}] {title}  ({secs:.2f} s)")
