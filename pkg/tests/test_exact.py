import random

import pytest

from zeroforcing import (
    Graph,
    complete_graph,
    connected_forcing_number_exact,
    connected_subset_masks,
    cycle_graph,
    enumerate_connected_forcing_sets,
    g1_spread_edge,
    g1_spread_graph,
    g2_spread_edge,
    g2_spread_graph,
    is_connected_set,
    is_forcing_set,
    path_graph,
    random_connected,
    spread_zc,
    zero_forcing_number,
)
from oracles import (
    naive_connected_subsets,
    naive_is_connected_set,
    naive_is_forcing,
    naive_z,
    naive_zc,
)


def test_z_fixtures():
    assert zero_forcing_number(path_graph(7)).value == 1
    assert zero_forcing_number(cycle_graph(6)).value == 2
    assert zero_forcing_number(complete_graph(4)).value == 3


def test_zc_fixtures():
    assert connected_forcing_number_exact(cycle_graph(6)).value == 2
    assert connected_forcing_number_exact(path_graph(5)).value == 1
    assert connected_forcing_number_exact(g2_spread_graph(3)).value == 5


def test_solvers_match_naive():
    for seed in range(25):
        n = random.Random(seed).randint(2, 8)
        g = random_connected(n, seed=seed, p=0.45)
        assert zero_forcing_number(g).value == naive_z(g)
        assert connected_forcing_number_exact(g).value == naive_zc(g)


def test_zc_at_least_z():
    for seed in range(25):
        n = random.Random(300 + seed).randint(2, 9)
        g = random_connected(n, seed=seed, p=0.4)
        assert connected_forcing_number_exact(g).value >= zero_forcing_number(g).value


def test_witness_properties(petersen):
    for g in (cycle_graph(7), complete_graph(5), petersen):
        res = connected_forcing_number_exact(g)
        assert len(res.witness) == res.value
        assert is_connected_set(g, res.witness)
        assert is_forcing_set(g, res.witness)
        # removing any single vertex breaks one of the two properties
        for v in res.witness:
            rest = set(res.witness) - {v}
            if rest:
                assert not (is_connected_set(g, rest) and is_forcing_set(g, rest))
        zres = zero_forcing_number(g)
        assert is_forcing_set(g, zres.witness)
        assert res.sets_examined > 0 and res.elapsed >= 0


def test_witness_deterministic_and_lexicographic():
    g = cycle_graph(6)
    res = connected_forcing_number_exact(g)
    assert res.witness == (0, 1)
    assert zero_forcing_number(g).witness == (0, 1)


def test_connected_enumeration_matches_powerset():
    for seed in range(15):
        n = random.Random(700 + seed).randint(2, 9)
        g = random_connected(n, seed=seed, p=0.35)
        mine = set()
        for mask in connected_subset_masks(g):
            mine.add(frozenset(v for v in range(g.n) if mask >> v & 1))
        assert mine == naive_connected_subsets(g)


def test_enumerate_families(triangle_two_pendants):
    fam = enumerate_connected_forcing_sets(cycle_graph(4), minimal_only=True)
    assert sorted(tuple(sorted(s)) for s in fam.members) == [
        (0, 1), (0, 3), (1, 2), (2, 3),
    ]
    fam = enumerate_connected_forcing_sets(path_graph(3), minimal_only=True)
    assert sorted(tuple(sorted(s)) for s in fam.members) == [(0,), (2,)]
    fam = enumerate_connected_forcing_sets(triangle_two_pendants, minimal_only=True)
    members = {tuple(sorted(s)) for s in fam.members}
    assert (0, 1, 3) in members and (0, 2) in members
    # mixed minimal cardinalities on this fixture
    assert {len(s) for s in fam.members} == {2, 3}


def test_enumerate_respects_cap():
    g = cycle_graph(5)
    fam = enumerate_connected_forcing_sets(g, size_cap=2)
    assert all(len(s) <= 2 for s in fam.members)
    assert fam.members
    with pytest.raises(ValueError, match="size_cap"):
        enumerate_connected_forcing_sets(g, size_cap=9)


def test_supersets_of_forcing_sets_force():
    for seed in range(10):
        g = random_connected(8, seed=seed, p=0.4)
        res = zero_forcing_number(g)
        base = set(res.witness)
        for v in range(g.n):
            assert naive_is_forcing(g, base | {v})


def test_superset_of_connected_forcing_can_disconnect():
    g = path_graph(4)
    # {0} forces the path; {0, 2} is forcing but not connected
    assert naive_is_forcing(g, {0, 2})
    assert not naive_is_connected_set(g, {0, 2})


def test_spread_cycle_edge():
    assert spread_zc(cycle_graph(6), edge=(0, 1)) == 1


def test_spread_g1_g2():
    assert spread_zc(g1_spread_graph(4), edge=g1_spread_edge(4)) == -4
    assert spread_zc(g2_spread_graph(3), edge=g2_spread_edge(3)) == 3


def test_spread_vertex():
    # deleting a cycle vertex of the paw leaves a path
    paw = Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    assert spread_zc(paw, vertex=1) == 2 - 1


def test_spread_validations(paw):
    with pytest.raises(ValueError, match="articulation"):
        spread_zc(paw, vertex=0)
    with pytest.raises(ValueError, match="bridge"):
        spread_zc(paw, edge=(0, 3))
    with pytest.raises(ValueError, match="exactly one"):
        spread_zc(paw)


def test_disconnected_rejected():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError, match="connected"):
        zero_forcing_number(g)
    with pytest.raises(ValueError, match="connected forcing set"):
        connected_forcing_number_exact(g)


def test_jobs_deterministic(monkeypatch):
    import zeroforcing.exact as exact_mod

    monkeypatch.setattr(exact_mod, "_PARALLEL_THRESHOLD", 8)
    g = random_connected(11, seed=5, p=0.25)
    serial = connected_forcing_number_exact(g)
    parallel = connected_forcing_number_exact(g, jobs=2)
    assert (serial.value, serial.witness) == (parallel.value, parallel.witness)
    zs = zero_forcing_number(g)
    zp = zero_forcing_number(g, jobs=2)
    assert (zs.value, zs.witness) == (zp.value, zp.witness)
