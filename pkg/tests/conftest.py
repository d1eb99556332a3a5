import pytest

from oracles import small_corpus

# (criterion id, detail, passed) collected by test_acceptance
ACCEPTANCE_RESULTS = []


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()


@pytest.fixture
def record():
    def _record(crit, detail, ok):
        ACCEPTANCE_RESULTS.append((crit, detail, bool(ok)))
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    by_crit = {}
    for crit, detail, ok in ACCEPTANCE_RESULTS:
        by_crit.setdefault(crit, []).append((detail, ok))
    for crit in sorted(by_crit, key=lambda c: int(c.split()[0].lstrip("AC"))):
        rows = by_crit[crit]
        failed = [d for d, ok in rows if not ok]
        status = "PASS" if not failed else "FAIL"
        line = f"[{status}] {crit} ({len(rows) - len(failed)}/{len(rows)} checks)"
        if failed:
            line += " failing: " + "; ".join(failed)
        tr.write_line(line)
