import pytest

from hopftower.instances import get_instance

_criteria = {}


@pytest.fixture(scope="session")
def sym():
    return get_instance("sym")


@pytest.fixture(scope="session")
def nq():
    return get_instance("nsym-qsym")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for mark in report.keywords:
        if mark.startswith("criterion_"):
            number = int(mark.split("_")[1])
            passed, failed = _criteria.setdefault(number, ([], []))
            (passed if report.passed else failed).append(report.nodeid.split("::")[-1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        passed, failed = _criteria[number]
        line = f"criterion {number}: {'FAIL' if failed else 'PASS'}  ({len(passed)}/{len(passed) + len(failed)} tests)"
        if failed:
            line += "  failed: " + ", ".join(failed)
        terminalreporter.write_line(line)


def pytest_configure(config):
    for k in range(1, 8):
        config.addinivalue_line("markers", f"criterion_{k}: acceptance criterion {k}")
