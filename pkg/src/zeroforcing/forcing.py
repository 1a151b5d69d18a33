"""The color change rule: derivations, force lists, chains, predicates.

A colored vertex with exactly one uncolored neighbor forces that
neighbor. ``derive`` runs the process to its fixpoint and records a
full trace; the bitmask helpers are the fast path used by solvers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph

__all__ = [
    "ColoringTrace",
    "derive",
    "is_forcing_set",
    "is_connected_set",
    "closure_mask",
    "connected_mask",
]


@dataclass(frozen=True)
class ColoringTrace:
    """Outcome of one derivation: fixpoint, forces, and chains."""

    initial_set: frozenset[int]
    derived_set: frozenset[int]
    forces: tuple[tuple[int, int], ...]
    chains: tuple[tuple[int, ...], ...]


def _validate_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    fs = frozenset(s)
    if not fs:
        raise ValueError("the initial set must be nonempty")
    for v in fs:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    return fs


def derive(
    g: Graph,
    s: Iterable[int],
    policy: str = "deterministic",
    seed: int | None = None,
) -> ColoringTrace:
    """Apply the color change rule from ``s`` until no force is possible.

    ``policy`` chooses which eligible forcer acts at each step:
    ``"deterministic"`` picks the smallest label, ``"random"`` draws
    uniformly using ``seed``. The fixpoint does not depend on the policy;
    the force list and chains may.
    """
    initial = _validate_set(g, s)
    if policy not in ("deterministic", "random"):
        raise ValueError(f"unknown policy {policy!r}")
    rng = random.Random(seed) if policy == "random" else None

    colored = set(initial)
    uncolored_nbrs = [0] * g.n
    for v in range(g.n):
        uncolored_nbrs[v] = sum(1 for w in g.neighbors(v) if w not in colored)
    eligible = {v for v in colored if uncolored_nbrs[v] == 1}
    forces: list[tuple[int, int]] = []
    while eligible:
        if rng is None:
            u = min(eligible)
        else:
            u = rng.choice(sorted(eligible))
        v = next(w for w in g.neighbors(u) if w not in colored)
        forces.append((u, v))
        colored.add(v)
        eligible.discard(u)
        for w in g.neighbors(v):
            uncolored_nbrs[w] -= 1
            if w in colored:
                if uncolored_nbrs[w] == 1:
                    eligible.add(w)
                else:
                    eligible.discard(w)
        if uncolored_nbrs[v] == 1:
            eligible.add(v)

    forced_by = {u: v for u, v in forces}
    chains = []
    for start in sorted(initial):
        chain = [start]
        while chain[-1] in forced_by:
            chain.append(forced_by[chain[-1]])
        chains.append(tuple(chain))
    return ColoringTrace(
        initial_set=initial,
        derived_set=frozenset(colored),
        forces=tuple(forces),
        chains=tuple(chains),
    )


def closure_mask(masks: Sequence[int], colored: int) -> int:
    """Fixpoint of the color change rule over bitmask state."""
    stack = []
    m = colored
    while m:
        b = m & -m
        m ^= b
        stack.append(b.bit_length() - 1)
    while stack:
        u = stack.pop()
        unc = masks[u] & ~colored
        if unc and (unc & (unc - 1)) == 0:
            colored |= unc
            v = unc.bit_length() - 1
            stack.append(v)
            w = masks[v] & colored
            while w:
                b = w & -w
                w ^= b
                stack.append(b.bit_length() - 1)
    return colored


def connected_mask(masks: Sequence[int], mask: int) -> bool:
    """True when the vertex set ``mask`` induces a connected subgraph."""
    if mask == 0:
        return False
    reach = mask & -mask
    while True:
        grow = reach
        m = reach
        while m:
            b = m & -m
            m ^= b
            grow |= masks[b.bit_length() - 1]
        grow &= mask
        if grow == reach:
            break
        reach = grow
    return reach == mask


def is_forcing_set(g: Graph, s: Iterable[int]) -> bool:
    """True when the derived set of ``s`` is all of V."""
    fs = _validate_set(g, s)
    masks = g.adjacency_masks()
    smask = sum(1 << v for v in fs)
    return closure_mask(masks, smask) == (1 << g.n) - 1


def is_connected_set(g: Graph, s: Iterable[int]) -> bool:
    """True when ``s`` induces a connected subgraph of g."""
    fs = _validate_set(g, s)
    masks = g.adjacency_masks()
    return connected_mask(masks, sum(1 << v for v in fs))
