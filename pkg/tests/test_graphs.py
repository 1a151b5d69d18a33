import pytest

from zeroforcing import Graph, build_graph, connected_components, is_connected, path_graph


def test_build_path():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4 and g.m == 3
    assert g.neighbors(1) == (0, 2)
    assert g.degree(0) == 1


def test_build_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.m == 3
    assert all(g.degree(v) == 2 for v in range(3))


def test_self_loop_rejected():
    with pytest.raises(ValueError, match="self-loop"):
        build_graph(2, [(0, 0)])


def test_out_of_range_rejected():
    with pytest.raises(ValueError, match="outside"):
        build_graph(2, [(0, 5)])


def test_duplicate_edge_error_and_warn():
    with pytest.raises(ValueError, match="duplicate"):
        build_graph(3, [(0, 1), (1, 0)])
    with pytest.warns(UserWarning, match="duplicate"):
        g = build_graph(3, [(0, 1), (1, 0), (1, 2)])
    assert g.m == 2


def test_adjacency_symmetric_and_consistent():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)])
    for u in range(5):
        for v in g.neighbors(u):
            assert u in g.neighbors(v)
    assert sum(g.degree(v) for v in range(5)) == 2 * g.m


def test_delete_edge():
    g = path_graph(4)
    h = g.delete_edge(1, 2)
    assert h.m == 2 and h.n == 4
    assert not is_connected(h)
    with pytest.raises(ValueError, match="not in graph"):
        g.delete_edge(0, 3)


def test_delete_vertex_relabels():
    g = path_graph(4)
    h = g.delete_vertex(1)
    # old 2,3 become 1,2; old 0 keeps its label and is isolated
    assert h.n == 3
    assert h.edges == frozenset({(1, 2)})


def test_components():
    g = Graph(5, [(0, 1), (2, 3)])
    comps = connected_components(g)
    assert comps == [frozenset({0, 1}), frozenset({2, 3}), frozenset({4})]
    assert not is_connected(g)
    assert connected_components(g, [0, 2, 3]) == [frozenset({0}), frozenset({2, 3})]


def test_masks():
    g = path_graph(3)
    assert g.adjacency_masks() == (0b010, 0b101, 0b010)


def test_equality_and_hash():
    a = Graph(3, [(0, 1), (1, 2)])
    b = Graph(3, [(1, 2), (0, 1)])
    assert a == b and hash(a) == hash(b)
    assert a != Graph(3, [(0, 1)])
