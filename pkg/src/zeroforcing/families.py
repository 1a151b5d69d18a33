"""Closed-form solvers for trees, unicyclic, cactus, and block graphs,
plus the vertex-removal greedy that works on any connected graph.

Each solver validates its family precondition and fails fast rather
than falling back; ``connected_forcing_number`` is the dispatching
umbrella that picks a formula when one applies and the exact solver
otherwise.
"""

from __future__ import annotations

import time

from .blocks import block_decomposition, classify_family
from .exact import SolveResult, connected_forcing_number_exact
from .forcing import closure_mask, connected_mask
from .graphs import Graph, is_connected
from .structure import CycleContext, cycle_context, structural_sets

__all__ = [
    "tree_zc",
    "unicyclic_zc",
    "block_graph_zc",
    "cactus_zc",
    "greedy_zc",
    "connected_forcing_number",
]


def _result(value, witness, examined, t0, method):
    return SolveResult(
        value=value,
        witness=tuple(sorted(witness)),
        sets_examined=examined,
        elapsed=time.perf_counter() - t0,
        method=method,
    )


def tree_zc(g: Graph) -> SolveResult:
    """Minimum connected forcing set of a tree.

    Paths need a single leaf; any other tree is solved by M.
    """
    t0 = time.perf_counter()
    fam = classify_family(g)
    if not fam.is_tree:
        raise ValueError("tree solver requires a tree")
    if fam.is_path:
        witness = (0,) if g.n == 1 else (min(v for v in range(g.n) if g.degree(v) == 1),)
        return _result(1, witness, 0, t0, "tree-formula")
    ss = structural_sets(g)
    return _result(len(ss.m_set), ss.m_set, 0, t0, "tree-formula")


def _cycle_pair_witness(g: Graph) -> tuple[int, int]:
    v = 0
    return v, min(g.neighbors(v))


def unicyclic_zc(g: Graph) -> SolveResult:
    """Minimum connected forcing set of a unicyclic graph.

    A plain cycle needs two adjacent vertices. Otherwise the candidate
    excluded segments around the cycle are enumerated between runs of
    articulation points (allowing up to two interior attachment points,
    both carrying single pendant paths), the largest is excluded, and
    the witness is M plus the rest of the cycle.
    """
    t0 = time.perf_counter()
    fam = classify_family(g)
    if not fam.is_unicyclic:
        raise ValueError("unicyclic solver requires exactly one cycle")
    if fam.is_cycle:
        return _result(2, _cycle_pair_witness(g), 0, t0, "unicyclic-formula")

    ctx = cycle_context(g)
    ss = structural_sets(g)
    cyc = set(ctx.cycle_vertices)
    arts = ctx.articulation_list
    k = len(arts)
    if k == 0:
        raise AssertionError("non-cycle unicyclic graph must have cycle attachments")
    p = ss.p
    r1 = ss.r1
    ccw = ctx.ccw_neighbor
    cw = ctx.cw_neighbor

    def trim_zero(u: int, v: int) -> set[int]:
        # Both ends attached (or a single attachment point on the whole
        # cycle): its ccw neighbor has to stay colored to start a chain.
        if (p[u] >= 1 and p[v] >= 1) or u == v:
            return {ccw(u)}
        return set()

    def trim_two(u: int, v: int) -> set[int]:
        if p[u] > 0 and p[v] > 0:
            return {ccw(u), cw(v)}
        if (p[u] > 0 and p[v] == 0) or (p[u] == 0 and v == u):
            return {ccw(u)}
        if p[u] == 0 and p[v] > 0:
            return {cw(v)}
        return set()

    def trim_one(u: int, v: int, w: int) -> set[int]:
        uv = g.has_edge(u, v)
        vw = g.has_edge(v, w)
        if not uv and not vw:
            return trim_two(u, w)
        if uv and not vw and p[w] > 0:
            return {cw(w)}
        if not uv and vw and p[u] > 0:
            return {ccw(u)}
        if uv and vw and u != w and p[u] > 0 and p[w] > 0:
            return {v}
        if u == w and uv:
            return {ccw(u), cw(u)} - {v}
        return set()

    candidates: list[tuple[int, int, int, frozenset[int]]] = []
    for i in range(k):
        u, v = arts[i], arts[(i + 1) % k]
        seg = set(ctx.segment(u, v)) - trim_zero(u, v)
        candidates.append((-len(seg), 0, i, frozenset(seg)))
    if k > 1:
        for i in range(k):
            mid = arts[(i + 1) % k]
            if mid not in r1:
                continue
            u, w = arts[i], arts[(i + 2) % k]
            seg = set(ctx.segment(u, w)) - trim_one(u, mid, w)
            candidates.append((-len(seg), 1, i, frozenset(seg)))
    if k > 2:
        for i in range(k):
            a, b = arts[(i + 1) % k], arts[(i + 2) % k]
            if a not in r1 or b not in r1 or not g.has_edge(a, b):
                continue
            u, v = arts[i], arts[(i + 3) % k]
            seg = set(ctx.segment(u, v)) - trim_two(u, v)
            candidates.append((-len(seg), 2, i, frozenset(seg)))

    candidates.sort(key=lambda c: c[:3])
    excluded = candidates[0][3]
    witness = ss.m_set | (cyc - excluded)
    return _result(len(witness), witness, len(candidates), t0, "unicyclic-formula")


def block_graph_zc(g: Graph) -> SolveResult:
    """n - b for a pendant-free block graph, where b counts the blocks
    owning at least one non-articulation vertex."""
    t0 = time.perf_counter()
    fam = classify_family(g)
    if not fam.is_block_graph:
        raise ValueError("block-graph solver requires every block to be a clique")
    if fam.is_path:
        raise ValueError("block-graph solver does not apply to paths")
    if not fam.pendant_free:
        raise ValueError("block-graph solver requires no pendant paths")
    dec = block_decomposition(g)
    dropped: set[int] = set()
    for block in dec.blocks:
        free = [v for v in block if v not in dec.articulation_points]
        if free:
            dropped.add(min(free))
    witness = set(range(g.n)) - dropped
    return _result(g.n - len(dropped), witness, 0, t0, "block-formula")


def cactus_zc(g: Graph) -> SolveResult:
    """Pendant-free cactus formula: n - sum of largest attachment-free
    cycle segments + number of outer blocks; plain cycles need 2."""
    t0 = time.perf_counter()
    fam = classify_family(g)
    if not fam.is_cactus:
        raise ValueError("cactus solver requires every block to be an edge or cycle")
    if fam.is_path:
        raise ValueError("cactus solver does not apply to paths")
    if not fam.pendant_free:
        raise ValueError("cactus solver requires no pendant paths")
    if fam.is_cycle:
        return _result(2, _cycle_pair_witness(g), 0, t0, "cactus-formula")
    dec = block_decomposition(g)
    removed: set[int] = set()
    add_back: set[int] = set()
    outer_count = 0
    for idx, block in enumerate(dec.blocks):
        if dec.outer[idx]:
            outer_count += 1
        if not dec.cycle_flags[idx]:
            continue
        ctx = cycle_context(g, frozenset(block))
        arts = [v for v in ctx.cycle_vertices if v in dec.articulation_points]
        if len(arts) == 1:
            seg = ctx.segment(arts[0], arts[0])
        else:
            seg = ()
            for j, a in enumerate(arts):
                cand = ctx.segment(a, arts[(j + 1) % len(arts)])
                if len(cand) > len(seg):
                    seg = cand
        removed.update(seg)
        if dec.outer[idx]:
            pivot = arts[0]
            add_back.add(min(ctx.ccw_neighbor(pivot), ctx.cw_neighbor(pivot)))
    witness = (set(range(g.n)) - removed) | add_back
    value = g.n - len(removed) + outer_count
    if value != len(witness):
        raise AssertionError("cactus witness size disagrees with formula")
    return _result(value, witness, 0, t0, "cactus-formula")


def greedy_zc(g: Graph) -> SolveResult:
    """Shrink V one removable vertex at a time until the set is minimal.

    Scans labels in increasing order each pass and removes the first
    vertex whose removal keeps the set connected and forcing. The result
    is always minimal, and minimum on cacti whose cycles are all outer
    blocks (and on trees).
    """
    t0 = time.perf_counter()
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if not is_connected(g):
        raise ValueError("greedy requires a connected graph")
    masks = g.adjacency_masks()
    full = (1 << g.n) - 1
    current = full
    tested = 0
    while True:
        removed = False
        m = current
        while m:
            b = m & -m
            m ^= b
            rest = current ^ b
            tested += 1
            if rest and connected_mask(masks, rest) and closure_mask(masks, rest) == full:
                current = rest
                removed = True
                break
        if not removed:
            break
    witness = []
    m = current
    while m:
        b = m & -m
        m ^= b
        witness.append(b.bit_length() - 1)
    return _result(len(witness), witness, tested, t0, "greedy")


def connected_forcing_number(g: Graph, jobs: int = 1) -> SolveResult:
    """Dispatch to the cheapest applicable solver.

    Trees, unicyclic graphs, and pendant-free block/cactus graphs use
    their formulas; everything else goes to the exact solver.
    """
    fam = classify_family(g)
    if fam.is_tree:
        return tree_zc(g)
    if fam.is_unicyclic:
        return unicyclic_zc(g)
    if fam.pendant_free and fam.is_block_graph:
        return block_graph_zc(g)
    if fam.pendant_free and fam.is_cactus:
        return cactus_zc(g)
    return connected_forcing_number_exact(g, jobs=jobs)
