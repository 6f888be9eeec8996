import pytest

_LINES: list[tuple[int, str]] = []


class Recorder:
    def __call__(self, number: int, title: str, ok: bool, detail: str = "") -> bool:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
        _LINES.append((number, line))
        print(line)
        return ok


@pytest.fixture
def acceptance():
    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_LINES, key=lambda t: t[0]):
        terminalreporter.write_line(line)
