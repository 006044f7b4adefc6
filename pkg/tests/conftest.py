import pytest

_ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def record():
    """Store one acceptance verdict: ``record(number, title, passed, detail)``."""
    def _record(number: int, title: str, passed: bool, detail: str = "") -> None:
        _ACCEPTANCE[number] = (title, bool(passed), detail)
    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, passed, detail = _ACCEPTANCE[number]
        status = "PASS" if passed else "FAIL"
        line = f"[{status}] {number:2d}. {title}"
        terminalreporter.write_line(f"{line}: {detail}" if detail else line)
