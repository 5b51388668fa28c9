import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from skewposet.diagrams import Partition, SkewDiagram  # noqa: E402

ACCEPTANCE = pytest.StashKey[list]()


@st.composite
def partitions_st(draw, max_size=12, max_parts=None):
    size = draw(st.integers(0, max_size))
    parts = []
    rest = size
    cap = size
    while rest:
        p = draw(st.integers(1, min(rest, cap)))
        parts.append(p)
        rest -= p
        cap = p
        if max_parts and len(parts) == max_parts:
            break
    return Partition(sorted(parts, reverse=True))


@st.composite
def skew_st(draw, max_size=8):
    outer = draw(partitions_st(max_size=max_size))
    inner = [draw(st.integers(0, p)) for p in outer]
    for i in range(1, len(inner)):
        inner[i] = min(inner[i], inner[i - 1])
    return SkewDiagram(outer, Partition(inner))


def pytest_configure(config):
    config.stash[ACCEPTANCE] = []


@pytest.fixture
def acceptance_log(request):
    return request.config.stash[ACCEPTANCE]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines):
        terminalreporter.write_line(line[1])
