import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")

# filled by test_acceptance.py: criterion number -> (passed, description)
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, text = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {text}")


@pytest.fixture
def record_criterion(request):
    """Call with (number, description); the outcome is taken from the test result."""
    entry = {}

    def record(number: int, description: str) -> None:
        entry["number"] = number
        entry["description"] = description
        ACCEPTANCE_RESULTS[number] = (False, description)

    yield record
    if entry:
        report = getattr(request.node, "rep_call", None)
        passed = report is not None and report.passed
        ACCEPTANCE_RESULTS[entry["number"]] = (passed, entry["description"])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
