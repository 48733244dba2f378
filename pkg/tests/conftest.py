import pytest

from chainsweep import build_graph

# 8-vertex worked example: adj(2)={1,3,6}, adj(3)={2,4,7}, adj(6)={2,5,7}, adj(7)={3,6,8}
EXAMPLE8_EDGES = [(1, 2), (2, 3), (2, 6), (3, 4), (3, 7), (5, 6), (6, 7), (7, 8)]

# path visiting labels 1,5,4,3,2 in order: no ascending chain leaves vertex 5
SCRAMBLED_PATH_EDGES = [(1, 5), (4, 5), (3, 4), (2, 3)]


@pytest.fixture
def example8():
    return build_graph(EXAMPLE8_EDGES, 8, d=2)


@pytest.fixture
def path5():
    return build_graph([(1, 2), (2, 3), (3, 4), (4, 5)], 5, d=2)


@pytest.fixture
def scrambled_path():
    return build_graph(SCRAMBLED_PATH_EDGES, 5, d=2)
