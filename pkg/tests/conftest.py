import pytest

_ACCEPTANCE: list[tuple[str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(criterion, text): acceptance criterion check")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        text = marker.args[1]
        callspec = getattr(item, "callspec", None)
        if callspec is not None:
            text = f"{text} [{callspec.id}]"
        _ACCEPTANCE.append((marker.args[0], "PASS" if rep.passed else "FAIL", text))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit, status, text in _ACCEPTANCE:
        terminalreporter.write_line(f"[{status}] criterion {crit}: {text}")
