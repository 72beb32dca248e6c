import pytest

_results = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark and (report.when == "call" or (report.when == "setup" and report.outcome != "passed")):
        detail = dict(report.user_properties).get("detail", "")
        _results.append((mark.args[0], mark.args[1], report.outcome, detail))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, outcome, detail in sorted(_results):
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"AC{num:<2} {status}  {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
