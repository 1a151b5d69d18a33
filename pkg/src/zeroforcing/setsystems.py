"""Hardness reduction gadget, set families over vertex sets, and the
axiom checks used to recognize matroids and their weaker variant.

The family attached to a graph is built from its connected forcing
sets I. The checked object is the complement-closed view {V \\ S : S in
I}; it is represented implicitly through I so the exponential family
is never materialized.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .exact import (
    SolveResult,
    connected_forcing_number_exact,
    enumerate_connected_forcing_sets,
    zero_forcing_number,
)
from .forcing import closure_mask, connected_mask
from .graphs import Graph, is_connected

__all__ = [
    "ReductionInstance",
    "ReductionReport",
    "SetFamily",
    "AxiomReport",
    "EqualityReport",
    "czf_reduction",
    "verify_reduction",
    "forcing_complement_family",
    "check_axioms",
    "equality_report",
]


@dataclass(frozen=True)
class ReductionInstance:
    """A transformed instance: a universal vertex plus two private leaves.

    ``transformed`` keeps the original adjacency, adds ``v_star``
    adjacent to every original vertex, and leaves ``l1``/``l2`` adjacent
    only to ``v_star``. A forcing-set bound k maps to k + 2.
    """

    original: Graph
    transformed: Graph
    v_star: int
    l1: int
    l2: int
    k: int | None = None

    @property
    def k_prime(self) -> int | None:
        return None if self.k is None else self.k + 2


def czf_reduction(g: Graph, k: int | None = None) -> ReductionInstance:
    """Build the decision-problem transformation for ``g`` (may be
    disconnected; the result never is)."""
    n = g.n
    edges = list(g.edges)
    edges.extend((v, n) for v in range(n))
    edges.append((n, n + 1))
    edges.append((n, n + 2))
    return ReductionInstance(
        original=g,
        transformed=Graph(n + 3, edges),
        v_star=n,
        l1=n + 1,
        l2=n + 2,
        k=k,
    )


@dataclass(frozen=True)
class ReductionReport:
    instance: ReductionInstance
    z_original: SolveResult
    zc_transformed: SolveResult
    ok: bool


def verify_reduction(g: Graph, jobs: int = 1) -> ReductionReport:
    """Solve both sides exactly and check Zc(G') = Z(G) + 2."""
    if not is_connected(g):
        raise ValueError("reduction verification requires a connected graph")
    z = zero_forcing_number(g, jobs=jobs)
    inst = czf_reduction(g, k=z.value)
    zc = connected_forcing_number_exact(inst.transformed, jobs=jobs)
    return ReductionReport(
        instance=inst,
        z_original=z,
        zc_transformed=zc,
        ok=zc.value == z.value + 2,
    )


@dataclass(frozen=True)
class SetFamily:
    """An explicit family of subsets of a ground set.

    With ``complemented`` set, the represented family is the complement
    of every listed member ({ground \\ X : X in members}); membership
    queries go through the stored members so only they are kept.
    """

    ground_set: frozenset[int]
    members: tuple[frozenset[int], ...]
    complemented: bool = False

    def __post_init__(self) -> None:
        for s in self.members:
            if not s <= self.ground_set:
                raise ValueError("family member outside the ground set")

    def contains(self, x: Iterable[int]) -> bool:
        xs = frozenset(x)
        probe = self.ground_set - xs if self.complemented else xs
        return probe in set(self.members)


def forcing_complement_family(g: Graph, size_cap: int | None = None) -> SetFamily:
    """The complement-closed family built on the connected forcing sets."""
    base = enumerate_connected_forcing_sets(g, size_cap=size_cap)
    return SetFamily(
        ground_set=base.ground_set, members=base.members, complemented=True
    )


@dataclass(frozen=True)
class AxiomReport:
    m1: bool
    m2: bool
    m3: bool
    m2_witness: tuple[frozenset[int], frozenset[int]] | None
    m3_witness: tuple[frozenset[int], frozenset[int], frozenset[int]] | None
    mode: str

    @property
    def is_paper_greedoid(self) -> bool:
        """The weaker axiom pair (empty set plus uniform maximality)."""
        return self.m1 and self.m3

    @property
    def is_matroid(self) -> bool:
        return self.m1 and self.m2 and self.m3


def _mask_of(ground: list[int], s: frozenset[int]) -> int:
    pos = {v: i for i, v in enumerate(ground)}
    return sum(1 << pos[v] for v in s)


def _set_of(ground: list[int], mask: int) -> frozenset[int]:
    out = set()
    while mask:
        b = mask & -mask
        mask ^= b
        out.add(ground[b.bit_length() - 1])
    return frozenset(out)


def check_axioms(
    fam: SetFamily,
    cap: int = 16,
    exhaustive_limit: int = 12,
    seed: int = 0,
    samples: int = 2048,
) -> AxiomReport:
    """Evaluate the three axioms on the family.

    M1: the empty set belongs. M2: the family is closed under subsets.
    M3: for every subset A of the ground set, all maximal members inside
    A share one cardinality. A-subsets are checked exhaustively up to
    ``exhaustive_limit`` ground elements and by seeded sampling beyond;
    ``mode`` records which. Witnesses explain any failure.
    """
    ground = sorted(fam.ground_set)
    s = len(ground)
    if s > cap:
        raise ValueError(f"ground set of size {s} exceeds the cap {cap}")
    full = (1 << s) - 1
    member_masks = {_mask_of(ground, x) for x in fam.members}

    if fam.complemented:
        in_family = lambda msk: (full & ~msk) in member_masks
    else:
        in_family = lambda msk: msk in member_masks

    m1 = in_family(0)

    # M2 holds iff the family survives removing one element at a time.
    m2 = True
    m2_witness = None
    base_masks = sorted(member_masks)
    for raw in base_masks:
        fam_mask = (full & ~raw) if fam.complemented else raw
        mm = fam_mask
        while mm:
            b = mm & -mm
            mm ^= b
            smaller = fam_mask ^ b
            if not in_family(smaller):
                m2 = False
                m2_witness = (_set_of(ground, smaller), _set_of(ground, fam_mask))
                break
        if not m2:
            break

    if s <= exhaustive_limit:
        mode = "exhaustive"
        a_masks = sorted(range(full + 1), key=lambda a: (-a.bit_count(), a))
    else:
        mode = "sampled"
        rng = random.Random(seed)
        count = min(samples, full + 1)
        a_masks = sorted(rng.sample(range(full + 1), count), key=lambda a: (-a.bit_count(), a))

    m3 = True
    m3_witness = None
    if fam.complemented:
        # Maximal family subsets of A are complements of minimal members
        # of I that contain ground \ A.
        ordered = sorted(member_masks, key=lambda m: (m.bit_count(), m))
        for a in a_masks:
            b = full & ~a
            minimal: list[int] = []
            size0 = -1
            for cand in ordered:
                if b & ~cand:
                    continue
                if any(t & ~cand == 0 and t != cand for t in minimal):
                    continue
                if not minimal:
                    size0 = cand.bit_count()
                elif cand.bit_count() != size0:
                    m3 = False
                    m3_witness = (
                        _set_of(ground, a),
                        _set_of(ground, full & ~minimal[0]),
                        _set_of(ground, full & ~cand),
                    )
                    break
                minimal.append(cand)
            if not m3:
                break
    else:
        ordered = sorted(member_masks, key=lambda m: (-m.bit_count(), m))
        for a in a_masks:
            maximal: list[int] = []
            size0 = -1
            for cand in ordered:
                if cand & ~a:
                    continue
                if any(cand & ~t == 0 and t != cand for t in maximal):
                    continue
                if not maximal:
                    size0 = cand.bit_count()
                elif cand.bit_count() != size0:
                    m3 = False
                    m3_witness = (
                        _set_of(ground, a),
                        _set_of(ground, maximal[0]),
                        _set_of(ground, cand),
                    )
                    break
                maximal.append(cand)
            if not m3:
                break

    return AxiomReport(
        m1=m1, m2=m2, m3=m3, m2_witness=m2_witness, m3_witness=m3_witness, mode=mode
    )


@dataclass(frozen=True)
class EqualityReport:
    z: int
    zc: int
    equal: bool
    connected_minimum_witness: tuple[int, ...] | None


def equality_report(g: Graph, jobs: int = 1) -> EqualityReport:
    """Report Z, Zc, and whether some minimum forcing set is connected.

    Decided semantically: every minimum-size forcing set is enumerated
    and tested for connectivity.
    """
    z = zero_forcing_number(g, jobs=jobs)
    zc = connected_forcing_number_exact(g, jobs=jobs)
    masks = g.adjacency_masks()
    full = (1 << g.n) - 1
    witness = None
    for combo in combinations(range(g.n), z.value):
        msk = sum(1 << v for v in combo)
        if closure_mask(masks, msk) == full and connected_mask(masks, msk):
            witness = combo
            break
    return EqualityReport(
        z=z.value,
        zc=zc.value,
        equal=witness is not None,
        connected_minimum_witness=witness,
    )
