import pytest

from strictspan import _backend
from strictspan.corpus import example_3_2

CRITERIA: dict[str, tuple[bool, str]] = {}


def record(criterion: str, ok: bool, detail: str = "") -> None:
    CRITERIA[criterion] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(CRITERIA, key=lambda k: int(k.split()[0])):
        ok, detail = CRITERIA[name]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {name}" + (f": {detail}" if detail else ""))


@pytest.fixture(scope="session")
def ex32():
    return example_3_2().complex


@pytest.fixture(params=_backend.available_backends())
def backend(request):
    return request.param
