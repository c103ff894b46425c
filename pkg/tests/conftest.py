import sys
from pathlib import Path

import pytest

from twotrail import Graph

sys.path.insert(0, str(Path(__file__).parent))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def c6() -> Graph:
    return cycle_graph(6)


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def k5() -> Graph:
    return complete_graph(5)


@pytest.fixture
def two_k2() -> Graph:
    return Graph.from_edges(4, [(0, 1), (2, 3)])


@pytest.fixture
def star3() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
