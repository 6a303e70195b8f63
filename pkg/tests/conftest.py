import itertools

import pytest
from hypothesis import strategies as st

from pbei import _purekernels
from pbei.graph import Graph

try:
    from pbei import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = [pytest.param(_purekernels, id="python")]
if _ckernels is not None:
    BACKENDS.append(pytest.param(_ckernels, id="compiled"))


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@st.composite
def graphs(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@st.composite
def connected_graphs(draw, min_n=1, max_n=5):
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(range(1, n + 1)))
    edges = set()
    for k in range(1, n):
        parent = order[draw(st.integers(0, k - 1))]
        edges.add(tuple(sorted((parent, order[k]))))
    pairs = [p for p in itertools.combinations(range(1, n + 1), 2) if p not in edges]
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), unique=True)))
    return Graph(n, edges)


# -- acceptance summary ------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
