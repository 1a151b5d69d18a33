"""Deterministic graph constructors and seeded random families.

Every random family is reproducible from its seed; identical specs
yield byte-identical edge lists.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, is_connected

__all__ = [
    "GeneratorSpec",
    "generate",
    "path_graph",
    "cycle_graph",
    "star_graph",
    "complete_graph",
    "spider_graph",
    "random_tree",
    "random_unicyclic",
    "random_cactus_pendant_free",
    "random_block_pendant_free",
    "random_outer_cactus",
    "random_connected",
    "g1_spread_graph",
    "g1_spread_edge",
    "g2_spread_graph",
    "g2_spread_edge",
]


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Center 0 with the given number of leaves."""
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, list(combinations(range(n), 2)))


def spider_graph(legs: int, leg_len: int) -> Graph:
    """Center 0 with ``legs`` disjoint paths of ``leg_len`` vertices."""
    if legs < 1 or leg_len < 1:
        raise ValueError("spider needs legs >= 1 and leg_len >= 1")
    edges = []
    for i in range(legs):
        first = 1 + i * leg_len
        edges.append((0, first))
        edges.extend((first + j, first + j + 1) for j in range(leg_len - 1))
    return Graph(1 + legs * leg_len, edges)


def _rng(seed: int | None) -> random.Random:
    return random.Random(0 if seed is None else seed)


def random_tree(n: int, seed: int | None = None) -> Graph:
    """Uniform labeled tree via a random code sequence."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = _rng(seed)
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in code:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = sorted(leaves)
    edges.append((u, w))
    return Graph(n, edges)


def random_unicyclic(n: int, seed: int | None = None) -> Graph:
    """Random tree plus one uniformly chosen missing edge."""
    if n < 3:
        raise ValueError("unicyclic needs n >= 3")
    rng = _rng(seed)
    tree = random_tree(n, rng.randrange(1 << 30))
    non_edges = [e for e in combinations(range(n), 2) if e not in tree.edges]
    extra = rng.choice(non_edges)
    return Graph(n, list(tree.edges) + [extra])


def _attach_cycle(edges: list, at: int, length: int, next_label: int) -> int:
    prev = at
    for _ in range(length - 1):
        edges.append((prev, next_label))
        prev = next_label
        next_label += 1
    edges.append((prev, at))
    return next_label


def random_cactus_pendant_free(n_max: int, seed: int | None = None) -> Graph:
    """Cycle blocks glued at shared vertices, with occasional bridges
    leading into further cycles. Never grows a pendant path."""
    if n_max < 3:
        raise ValueError("cactus needs n_max >= 3")
    rng = _rng(seed)
    length = rng.randint(3, min(6, n_max))
    edges: list[tuple[int, int]] = []
    n = _attach_cycle(edges, 0, length, 1)
    while True:
        room = n_max - n
        options = []
        if room >= 2:
            options.append("cycle")
        if room >= 3:
            options.append("bridge_cycle")
        if not options or rng.random() < 0.3:
            break
        action = rng.choice(options)
        at = rng.randrange(n)
        if action == "cycle":
            length = rng.randint(3, min(6, room + 1))
            n = _attach_cycle(edges, at, length, n)
        else:
            w = n
            edges.append((at, w))
            n += 1
            length = rng.randint(3, min(6, n_max - n + 1))
            n = _attach_cycle(edges, w, length, n)
    return Graph(n, edges)


def _attach_clique(edges: list, at: int, size: int, next_label: int) -> int:
    fresh = list(range(next_label, next_label + size - 1))
    group = [at] + fresh
    edges.extend(combinations(group, 2))
    return next_label + size - 1


def random_block_pendant_free(n_max: int, seed: int | None = None) -> Graph:
    """Clique blocks glued at shared vertices, plus bridge-into-clique
    growths; every bridge endpoint keeps a clique so no pendants form."""
    if n_max < 3:
        raise ValueError("block graph needs n_max >= 3")
    rng = _rng(seed)
    size = rng.randint(3, min(5, n_max))
    edges: list[tuple[int, int]] = []
    n = _attach_clique(edges, 0, size, 1)
    while True:
        room = n_max - n
        options = []
        if room >= 2:
            options.append("clique")
        if room >= 3:
            options.append("bridge_clique")
        if not options or rng.random() < 0.3:
            break
        action = rng.choice(options)
        at = rng.randrange(n)
        if action == "clique":
            size = rng.randint(3, min(5, room + 1))
            n = _attach_clique(edges, at, size, n)
        else:
            w = n
            edges.append((at, w))
            n += 1
            size = rng.randint(3, min(5, n_max - n + 1))
            n = _attach_clique(edges, w, size, n)
    return Graph(n, edges)


def random_outer_cactus(n_max: int, seed: int | None = None) -> Graph:
    """A tree skeleton with cycles hung on skeleton vertices.

    Every cycle touches the rest of the graph at one vertex only, so all
    cycles are outer blocks; pendant paths from the skeleton are kept.
    """
    if n_max < 5:
        raise ValueError("outer cactus needs n_max >= 5")
    rng = _rng(seed)
    t = rng.randint(2, min(6, n_max - 2))
    skeleton = random_tree(t, rng.randrange(1 << 30))
    edges = list(skeleton.edges)
    n = t
    cycles = 0
    while True:
        room = n_max - n
        if room < 2 or (cycles > 0 and rng.random() < 0.35):
            break
        at = rng.randrange(t)
        length = rng.randint(3, min(6, room + 1))
        n = _attach_cycle(edges, at, length, n)
        cycles += 1
    if cycles == 0:
        raise AssertionError("budget guarantees at least one cycle")
    return Graph(n, edges)


def random_connected(n: int, seed: int | None = None, p: float = 0.5) -> Graph:
    """Edge-probability graph resampled until connected."""
    if n < 1:
        raise ValueError("graph needs n >= 1")
    rng = _rng(seed)
    for _ in range(1000):
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        g = Graph(n, edges)
        if is_connected(g):
            return g
    # Degenerate parameters: fall back to a random tree plus extras.
    tree = random_tree(n, rng.randrange(1 << 30))
    extra = [e for e in combinations(range(n), 2) if e not in tree.edges and rng.random() < p]
    return Graph(n, list(tree.edges) + extra)


def g1_spread_graph(k: int) -> Graph:
    """Even cycle of length 2k with a pendant leaf on each endpoint of
    two antipodal edges; deleting a far-from-the-leaves cycle edge makes
    the connected forcing number jump from 4 to k + 4."""
    if k < 4:
        raise ValueError("g1_spread needs k >= 4")
    n = 2 * k
    edges = [(i, (i + 1) % n) for i in range(n)]
    for offset, anchor in enumerate((0, 1, k, k + 1)):
        edges.append((anchor, n + offset))
    return Graph(n + 4, edges)


def g1_spread_edge(k: int) -> tuple[int, int]:
    """Cycle edge with neither endpoint carrying a pendant leaf."""
    if k < 4:
        raise ValueError("g1_spread needs k >= 4")
    return (2, 3)


def g2_spread_graph(k: int) -> Graph:
    """Path on k vertices with a triangle glued to each end.

    For k = 1 both triangles share the single path vertex.
    """
    if k < 1:
        raise ValueError("g2_spread needs k >= 1")
    edges = [(i, i + 1) for i in range(k - 1)]
    a, b = k, k + 1
    edges += [(0, a), (0, b), (a, b)]
    c, d = k + 2, k + 3
    end = k - 1
    edges += [(end, c), (end, d), (c, d)]
    return Graph(k + 4, edges)


def g2_spread_edge(k: int) -> tuple[int, int]:
    """Triangle edge at the path end; deleting it collapses the
    connected forcing number to 2."""
    if k < 1:
        raise ValueError("g2_spread needs k >= 1")
    return (0, k)


@dataclass(frozen=True)
class GeneratorSpec:
    """Reproducible description of one generated graph."""

    family: str
    n: int | None = None
    k: int | None = None
    legs: int | None = None
    leg_len: int | None = None
    seed: int | None = None

    def label(self) -> str:
        parts = [self.family]
        for key in ("n", "k", "legs", "leg_len", "seed"):
            val = getattr(self, key)
            if val is not None:
                parts.append(f"{key}={val}")
        return ",".join(parts)


def _need(spec: GeneratorSpec, attr: str) -> int:
    val = getattr(spec, attr)
    if val is None:
        raise ValueError(f"family {spec.family!r} requires parameter {attr!r}")
    return val


def generate(spec: GeneratorSpec) -> Graph:
    """Build the graph described by ``spec``."""
    fam = spec.family
    if fam == "path":
        return path_graph(_need(spec, "n"))
    if fam == "cycle":
        return cycle_graph(_need(spec, "n"))
    if fam == "star":
        return star_graph(_need(spec, "n") - 1)
    if fam == "complete":
        return complete_graph(_need(spec, "n"))
    if fam == "spider":
        return spider_graph(_need(spec, "legs"), _need(spec, "leg_len"))
    if fam == "random_tree":
        return random_tree(_need(spec, "n"), spec.seed)
    if fam == "random_unicyclic":
        return random_unicyclic(_need(spec, "n"), spec.seed)
    if fam == "random_cactus":
        return random_cactus_pendant_free(_need(spec, "n"), spec.seed)
    if fam == "random_block":
        return random_block_pendant_free(_need(spec, "n"), spec.seed)
    if fam == "random_outer_cactus":
        return random_outer_cactus(_need(spec, "n"), spec.seed)
    if fam == "random_connected":
        return random_connected(_need(spec, "n"), spec.seed)
    if fam == "g1_spread":
        return g1_spread_graph(_need(spec, "k"))
    if fam == "g2_spread":
        return g2_spread_graph(_need(spec, "k"))
    raise ValueError(f"unknown generator family {spec.family!r}")
