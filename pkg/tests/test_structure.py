import random

import pytest

from zeroforcing import (
    Graph,
    block_decomposition,
    complete_graph,
    connected_forcing_number_exact,
    cycle_context,
    cycle_graph,
    enumerate_connected_forcing_sets,
    lower_bounds,
    path_graph,
    random_unicyclic,
    spider_graph,
    star_graph,
    structural_sets,
)


def test_star_sets():
    ss = structural_sets(star_graph(4))
    assert ss.r3 == frozenset({0})
    assert ss.r1 == ss.r2 == frozenset()
    assert len(ss.l_set) == 3 and ss.l_set <= {1, 2, 3, 4}
    assert len(ss.m_set) == 4
    # value matches the exact solver
    assert connected_forcing_number_exact(star_graph(4)).value == 4


def test_spider_sets():
    g = spider_graph(3, 2)
    ss = structural_sets(g)
    assert ss.r3 == frozenset({0})
    assert ss.r1 == frozenset({1, 3, 5})
    assert len(ss.l_set) == 2 and ss.l_set < {1, 3, 5}
    assert len(ss.m_set) == 3
    assert connected_forcing_number_exact(g).value == 3
    # all-but-one bases per vertex
    assert ss.p[0] == 3
    assert ss.excluded_base_per_vertex[0] == 1  # longest tie broken by label


def test_paw_sets(paw):
    ss = structural_sets(paw)
    assert ss.r1 == frozenset({0})
    assert ss.r2 == ss.r3 == frozenset()
    assert ss.l_set == frozenset()
    assert ss.m_set == frozenset()


def test_path_rejected():
    with pytest.raises(ValueError, match="path"):
        structural_sets(path_graph(5))


def test_m_in_every_connected_forcing_set(paw, bowtie, triangle_two_pendants):
    for g in (paw, bowtie, triangle_two_pendants, spider_graph(3, 2), star_graph(3)):
        ss = structural_sets(g)
        fam = enumerate_connected_forcing_sets(g)
        assert fam.members
        for s in fam.members:
            assert ss.m_set <= s


def test_block_bound_per_set(bowtie, triangle_c4):
    for g in (bowtie, triangle_c4, complete_graph(4)):
        dec = block_decomposition(g)
        fam = enumerate_connected_forcing_sets(g)
        for s in fam.members:
            for block in dec.blocks:
                bset = set(block)
                delta = min(
                    sum(1 for w in g.neighbors(v) if w in bset) for v in block
                )
                assert len(s & bset) >= delta


def test_lower_bounds_fixtures(bowtie):
    c6 = cycle_graph(6)
    bm, bb = lower_bounds(c6, block_decomposition(c6), structural_sets(c6))
    assert (bm, bb) == (0, 2)
    assert connected_forcing_number_exact(c6).value == 2

    k5 = complete_graph(5)
    bm, bb = lower_bounds(k5, block_decomposition(k5), structural_sets(k5))
    assert bb == 4
    assert connected_forcing_number_exact(k5).value == 4

    bm, bb = lower_bounds(bowtie, block_decomposition(bowtie), structural_sets(bowtie))
    assert bb == 3
    assert connected_forcing_number_exact(bowtie).value == 3


def test_bounds_below_exact_on_random_unicyclic():
    for seed in range(40):
        n = random.Random(seed).randint(4, 10)
        g = random_unicyclic(n, seed=seed)
        exact = connected_forcing_number_exact(g).value
        bm, bb = lower_bounds(g, block_decomposition(g), structural_sets(g))
        assert exact >= max(bm, bb)


def test_cycle_context_c7():
    ctx = cycle_context(cycle_graph(7))
    assert len(ctx) == 7
    assert ctx.articulation_list == ()
    assert ctx.cycle_vertices[0] == 0


def test_cycle_context_paw(paw):
    ctx = cycle_context(paw)
    assert set(ctx.cycle_vertices) == {0, 1, 2}
    assert ctx.articulation_list == (0,)


def test_cycle_context_two_attachments(triangle_two_pendants):
    ctx = cycle_context(triangle_two_pendants)
    assert set(ctx.cycle_vertices) == {0, 1, 2}
    assert set(ctx.articulation_list) == {0, 1}
    # listed in traversal order starting from vertex 0
    assert ctx.articulation_list[0] == 0


def test_cycle_context_errors():
    with pytest.raises(ValueError, match="no cycle"):
        cycle_context(path_graph(4))
    with pytest.raises(ValueError, match="more than one"):
        cycle_context(Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3)]))


def test_segments_arithmetic():
    ctx = cycle_context(cycle_graph(9))
    cyc = ctx.cycle_vertices
    for u in cyc:
        for v in cyc:
            if u == v:
                continue
            assert len(ctx.segment(u, v)) + len(ctx.segment(v, u)) + 2 == 9
        assert len(ctx.segment(u, u)) == 8
        assert ctx.segment(u, ctx.ccw_neighbor(u)) == ()
    assert ctx.cw_neighbor(ctx.ccw_neighbor(0)) == 0


def test_cycle_context_supplied_block(bowtie):
    ctx = cycle_context(bowtie, cycle=frozenset({0, 1, 2}))
    assert set(ctx.cycle_vertices) == {0, 1, 2}
    assert ctx.articulation_list == (2,)
