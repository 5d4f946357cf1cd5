import pytest

from genmaxwell.momentum import LightlikeMomentum
from genmaxwell.representation import build_representation


@pytest.fixture(scope="session")
def rep():
    return build_representation()


@pytest.fixture
def k345():
    return LightlikeMomentum(3, 4, 0, 5)


@pytest.fixture
def kz():
    """Unit momentum along the third axis."""
    return LightlikeMomentum(0, 0, 1, 1)


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion, when the acceptance module ran."""
    import sys

    mod = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    if mod is None or not hasattr(mod, "summary_lines"):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
