import pytest

from qdrg.constructions import REGISTRY

_BUILT = {}
_CRITERIA = {}


@pytest.fixture(scope="session")
def built():
    """Build each registered construction at most once per session."""
    def get(name):
        if name not in _BUILT:
            _BUILT[name] = REGISTRY[name].builder()
        return _BUILT[name]
    return get


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _CRITERIA[marker.args[0]] = (rep.passed, item.name)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_CRITERIA):
        passed, name = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {name}")
