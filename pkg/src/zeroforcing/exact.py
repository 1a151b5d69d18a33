"""Brute-force exact solvers and forcing-spread computation.

Candidate sets are bitmasks over Python ints, which handle any vertex
count. Connected candidates are produced by a binary-partition
enumeration that visits each connected vertex set exactly once, so the
connected solver never materializes disconnected candidates.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .forcing import closure_mask, connected_mask
from .graphs import Graph, connected_components, is_connected

__all__ = [
    "SolveResult",
    "zero_forcing_number",
    "connected_forcing_number_exact",
    "enumerate_connected_forcing_sets",
    "connected_subset_masks",
    "spread_zc",
]


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: tuple[int, ...]
    sets_examined: int
    elapsed: float
    method: str = "exact"


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return tuple(out)


def connected_subset_masks(g: Graph) -> list[int]:
    """All nonempty connected vertex sets of g, as bitmasks.

    Each set is produced exactly once: sets are rooted at their smallest
    vertex and grown only through larger-labeled neighbors, branching on
    include/exclude of one candidate at a time.
    """
    masks = g.adjacency_masks()
    n = g.n
    full = (1 << n) - 1
    out: list[int] = []

    def rec(s: int, ext: int, banned: int) -> None:
        out.append(s)
        while ext:
            ubit = ext & -ext
            ext ^= ubit
            u = ubit.bit_length() - 1
            grow = (ext | (masks[u] & allowed & ~banned)) & ~(s | ubit)
            rec(s | ubit, grow, banned)
            banned |= ubit

    for v in range(n):
        vbit = 1 << v
        allowed = full & ~((vbit << 1) - 1)
        rec(vbit, masks[v] & allowed, 0)
    return out


def _first_forcing(
    candidates: Sequence[int], masks: Sequence[int], full: int, jobs: int
) -> tuple[int, int] | None:
    """(index, mask) of the first forcing candidate, scanning in order."""
    if jobs <= 1 or len(candidates) < 4096:
        for i, c in enumerate(candidates):
            if closure_mask(masks, c) == full:
                return i, c
        return None
    chunk = max(1024, len(candidates) // (jobs * 4))
    spans = [
        (list(candidates[i : i + chunk]), list(masks), full)
        for i in range(0, len(candidates), chunk)
    ]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for base, hit in zip(
            range(0, len(candidates), chunk), pool.map(_scan_chunk, spans)
        ):
            if hit is not None:
                return base + hit[0], hit[1]
    return None


def _scan_chunk(args: tuple[list[int], list[int], int]) -> tuple[int, int] | None:
    cands, masks, full = args
    for i, c in enumerate(cands):
        if closure_mask(masks, c) == full:
            return i, c
    return None


def zero_forcing_number(g: Graph, jobs: int = 1) -> SolveResult:
    """Exact minimum size of a forcing set, searched by cardinality.

    The witness is the lexicographically smallest minimum forcing set.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if not is_connected(g):
        raise ValueError("the exact solver requires a connected graph")
    t0 = time.perf_counter()
    masks = g.adjacency_masks()
    full = (1 << g.n) - 1
    examined = 0
    for k in range(1, g.n + 1):
        layer = [sum(1 << v for v in combo) for combo in combinations(range(g.n), k)]
        hit = _first_forcing(layer, masks, full, jobs)
        if hit is not None:
            examined += hit[0] + 1
            return SolveResult(
                value=k,
                witness=_mask_to_tuple(hit[1]),
                sets_examined=examined,
                elapsed=time.perf_counter() - t0,
                method="exact-forcing",
            )
        examined += len(layer)
    raise AssertionError("V itself always forces; unreachable")


def connected_forcing_number_exact(g: Graph, jobs: int = 1) -> SolveResult:
    """Exact minimum size of a connected forcing set.

    Only connected candidates are derived, in increasing cardinality and
    lexicographic order, so the reported witness is deterministic.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if not is_connected(g):
        raise ValueError("a disconnected graph has no connected forcing set")
    t0 = time.perf_counter()
    masks = g.adjacency_masks()
    full = (1 << g.n) - 1
    by_size: dict[int, list[tuple[tuple[int, ...], int]]] = {}
    for mask in connected_subset_masks(g):
        k = mask.bit_count()
        by_size.setdefault(k, []).append((_mask_to_tuple(mask), mask))
    examined = 0
    for k in range(1, g.n + 1):
        layer = sorted(by_size.get(k, ()))
        cands = [mask for _, mask in layer]
        hit = _first_forcing(cands, masks, full, jobs)
        if hit is not None:
            examined += hit[0] + 1
            return SolveResult(
                value=k,
                witness=layer[hit[0]][0],
                sets_examined=examined,
                elapsed=time.perf_counter() - t0,
                method="exact-connected-forcing",
            )
        examined += len(cands)
    raise AssertionError("V itself always connected-forces; unreachable")


def enumerate_connected_forcing_sets(
    g: Graph, minimal_only: bool = False, size_cap: int | None = None
):
    """All connected forcing sets up to ``size_cap`` as a SetFamily.

    With ``minimal_only``, keeps only sets from which no single vertex
    can be removed while staying connected and forcing. Members are
    ordered by size then lexicographically.
    """
    from .setsystems import SetFamily

    if not is_connected(g):
        raise ValueError("a disconnected graph has no connected forcing set")
    cap = g.n if size_cap is None else size_cap
    if cap > g.n or cap < 0:
        raise ValueError(f"size_cap must be within 0..{g.n}")
    masks = g.adjacency_masks()
    full = (1 << g.n) - 1
    hits = [
        m
        for m in connected_subset_masks(g)
        if m.bit_count() <= cap and closure_mask(masks, m) == full
    ]
    if minimal_only:
        kept = []
        for m in hits:
            removable = False
            mm = m
            while mm:
                b = mm & -mm
                mm ^= b
                rest = m ^ b
                if rest and connected_mask(masks, rest) and closure_mask(masks, rest) == full:
                    removable = True
                    break
            if not removable:
                kept.append(m)
        hits = kept
    members = sorted((_mask_to_tuple(m) for m in hits), key=lambda t: (len(t), t))
    return SetFamily(
        ground_set=frozenset(range(g.n)),
        members=tuple(frozenset(t) for t in members),
        complemented=False,
    )


def _dispatch_zc(g: Graph, jobs: int = 1) -> int:
    from .families import connected_forcing_number

    return connected_forcing_number(g, jobs=jobs).value


def spread_zc(
    g: Graph,
    vertex: int | None = None,
    edge: tuple[int, int] | None = None,
    jobs: int = 1,
) -> int:
    """Change of the connected forcing number when deleting a target.

    The target must keep the graph connected: a non-articulation vertex
    or a non-bridge edge. Returns Zc(G) - Zc(G - target).
    """
    if (vertex is None) == (edge is None):
        raise ValueError("give exactly one of vertex= or edge=")
    if not is_connected(g):
        raise ValueError("spread requires a connected graph")
    if vertex is not None:
        if not (0 <= vertex < g.n):
            raise ValueError(f"vertex {vertex} out of range")
        rest = [u for u in range(g.n) if u != vertex]
        if len(connected_components(g, rest)) != 1:
            raise ValueError(f"vertex {vertex} is an articulation point")
        reduced = g.delete_vertex(vertex)
    else:
        u, v = edge  # type: ignore[misc]
        reduced = g.delete_edge(u, v)
        if not is_connected(reduced):
            raise ValueError(f"edge ({u},{v}) is a bridge")
    return _dispatch_zc(g, jobs) - _dispatch_zc(reduced, jobs)
