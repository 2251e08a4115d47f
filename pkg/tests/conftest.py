import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Run the checks of one acceptance criterion and record a status line.

    ``checks`` yields ``(label, result)`` pairs.  ``result`` is a bool, or
    None for an instance that could not be decided within its size budget;
    such instances turn PASS into PARTIAL and are listed in the line.  An
    exception counts as a failure and is re-raised after recording.
    """

    def _run(number: int, title: str, checks) -> None:
        try:
            results = list(checks())
        except Exception as e:
            _record(number, title, "FAIL", f"{type(e).__name__}: {e}")
            raise
        failed = [label for label, ok in results if ok is False]
        open_ = [label for label, ok in results if ok is None]
        decided = len(results) - len(open_)
        if failed:
            status, detail = "FAIL", "failed: " + "; ".join(failed[:5])
        elif open_:
            status = "PARTIAL"
            detail = f"{decided} checks passed, {len(open_)} beyond budget: " + "; ".join(open_[:5])
        else:
            status, detail = "PASS", f"{decided} checks"
        _record(number, title, status, detail)
        assert not failed, failed

    return _run


def _record(number: int, title: str, status: str, detail: str) -> None:
    line = f"[{status}] criterion {number:2d}: {title} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
