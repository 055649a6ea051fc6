import pytest

_LINES: dict[str, str] = {}


class AcceptanceLog:
    def record(self, key: str, ok: bool, detail: str = "") -> None:
        _LINES[key] = f"[{'PASS' if ok else 'FAIL'}] criterion {key}" + (f": {detail}" if detail else "")


@pytest.fixture
def acceptance():
    return AcceptanceLog()


def _order(key):
    head, _, tail = key.partition("-")
    return (int(head.rstrip("abcdefg")), head, tail)


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_LINES, key=_order):
        terminalreporter.write_line(_LINES[key])
