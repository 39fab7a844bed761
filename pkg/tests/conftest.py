import pytest

_results: dict[int, tuple[str, list[bool]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = marker.args
        _results.setdefault(number, (title, []))[1].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        title, outcomes = _results[number]
        status = "PASS" if all(outcomes) else "FAIL"
        parts = f" ({sum(outcomes)}/{len(outcomes)} parts)" if len(outcomes) > 1 else ""
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {title}{parts}")
