import time

import hypothesis
import pytest

from ocasbox.search import run_search

hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile("ci")

_criteria: dict[str, list[tuple[str, str]]] = {}
_notes: list[str] = []


@pytest.fixture(scope="session")
def report4():
    return run_search(4)


@pytest.fixture(scope="session")
def timed_report5():
    start = time.perf_counter()
    report = run_search(5)
    return report, time.perf_counter() - start


@pytest.fixture(scope="session")
def report5(timed_report5):
    return timed_report5[0]


@pytest.fixture
def note():
    """Append a line to the acceptance summary printed at the end of the run."""
    return _notes.append


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _criteria.setdefault(str(marker.args[0]), []).append((item.name, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_criteria, key=lambda c: (len(c), c)):
        results = _criteria[cid]
        ok = all(o == "passed" for _, o in results)
        failed = [name for name, o in results if o != "passed"]
        line = f"criterion {cid}: {'PASS' if ok else 'FAIL'} ({len(results)} checks)"
        if failed:
            line += " failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
    for line in _notes:
        terminalreporter.write_line(f"  note: {line}")
