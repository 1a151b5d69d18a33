import pytest

from zeroforcing import Graph


@pytest.fixture
def paw():
    # triangle 0-1-2 with a pendant leaf 3 at 0
    return Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])


@pytest.fixture
def bowtie():
    # two triangles sharing vertex 2
    return Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


@pytest.fixture
def triangle_two_pendants():
    # triangle 0-1-2 with leaves 3 at 0 and 4 at 1
    return Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])


@pytest.fixture
def two_k4():
    # two K4 blocks sharing vertex 3
    return Graph(
        7,
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
         (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)],
    )


@pytest.fixture
def triangle_c4():
    # triangle and a 4-cycle sharing vertex 0
    return Graph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 0)])


@pytest.fixture
def two_triangles_bridge():
    return Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])


@pytest.fixture
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)
