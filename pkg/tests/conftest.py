from pathlib import Path

import pytest

from netimmunize import Graph, load_edge_list

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
KARATE_PATH = DATA_DIR / "karate.edges"


@pytest.fixture(scope="session")
def karate() -> Graph:
    g, report = load_edge_list(KARATE_PATH, one_indexed=True)
    assert report.clean
    return g


@pytest.fixture
def triangle() -> Graph:
    return Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def path3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def star4() -> Graph:
    # center is node 0
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def single_edge() -> Graph:
    return Graph.from_edges(2, [(0, 1)])
