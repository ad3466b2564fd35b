import pytest

from rextension.gf import parse_poly
from rextension.linalg import Mat
from rextension.synthesis import ChoiceScript, PolyLadder

_ACCEPTANCE: list[tuple[str, bool, str]] = []


def record_criterion(name: str, ok: bool, detail: str = "") -> None:
    _ACCEPTANCE.append((name, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip())


def P(text, q=2):
    return parse_poly(text, q)


class Worked:
    """The q=2, R=(2,2,2), n=6 design run end to end."""

    q = 2
    R = (2, 2, 2)
    n = 6
    ladder = PolyLadder(
        2,
        {
            3: P("s^3+s+1"),
            4: P("s^4+s+1"),
            5: P("s^5+s^2+1"),
            6: P("s^6+s+1"),
        },
    )
    M3 = [[1, 1, 1], [0, 1, 1], [0, 0, 1]]
    appended = [[1, 0], [0, 1], [0, 1]]
    after_step1 = [[1, 1, 1, 1], [0, 1, 1, 0], [0, 0, 0, 1]]
    M4 = [[1, 1, 0, 1], [0, 0, 0, 1], [0, 1, 1, 1]]
    after_step2 = [[1, 1, 0, 1, 0], [0, 0, 0, 0, 1], [0, 1, 1, 1, 1]]
    M5 = [[0, 0, 0, 0, 1], [0, 1, 0, 1, 1], [0, 0, 0, 1, 1]]
    MW = [[0, 0, 0, 0, 0, 1], [0, 1, 0, 1, 1, 0], [0, 0, 0, 1, 1, 1]]
    Mstar = [
        [0, 0, 0, 0, 0, 1],
        [0, 1, 0, 1, 1, 0],
        [0, 0, 0, 1, 1, 1],
        [0, 0, 0, 0, 1, 0],
        [1, 0, 1, 1, 0, 1],
        [0, 0, 1, 1, 1, 0],
    ]
    A33 = [
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
        [1, 0, 1, 1, 0, 0],
        [1, 1, 0, 1, 0, 1],
        [1, 1, 1, 1, 0, 1],
    ]
    B0 = [[1, 0, 1], [1, 1, 0], [1, 1, 1]]
    B1 = [[1, 0, 0], [1, 0, 1], [1, 0, 1]]

    @property
    def choices(self):
        return ChoiceScript(Mat(self.M3, 2), self.appended)


@pytest.fixture
def worked():
    return Worked()
