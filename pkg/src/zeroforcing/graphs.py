"""Simple undirected graphs with dense integer vertex labels.

Vertices are always 0..n-1. Instances are immutable; deletion helpers
return new graphs. Construction rejects self-loops and parallel edges.
"""

from __future__ import annotations

import warnings
from collections import deque
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "build_graph",
    "connected_components",
    "is_connected",
]


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj", "_adj_sets", "_masks")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for e in edges:
            u, v = e
            if not (0 <= u < n) or not (0 <= v < n):
                raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges = frozenset(seen)
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        self._adj_sets = tuple(frozenset(nbrs) for nbrs in adj)
        self._masks: tuple[int, ...] | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighborhoods as bitmasks (cached)."""
        if self._masks is None:
            self._masks = tuple(
                sum(1 << w for w in self._adj[v]) for v in range(self.n)
            )
        return self._masks

    def delete_edge(self, u: int, v: int) -> "Graph":
        key = (u, v) if u < v else (v, u)
        if key not in self.edges:
            raise ValueError(f"edge ({u},{v}) not in graph")
        return Graph(self.n, self.edges - {key})

    def delete_vertex(self, v: int) -> "Graph":
        """Remove v; labels above v shift down by one to stay dense."""
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range")
        kept = [
            (a - (a > v), b - (b > v))
            for (a, b) in self.edges
            if a != v and b != v
        ]
        return Graph(self.n - 1, kept)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(
    n: int,
    edge_list: Iterable[Sequence[int]],
    duplicates: str = "error",
) -> Graph:
    """Construct a validated Graph from an edge list.

    ``duplicates`` controls how repeated edges are handled: ``"error"``
    rejects them, ``"warn"`` deduplicates and emits a warning.
    """
    if duplicates not in ("error", "warn"):
        raise ValueError(f"duplicates must be 'error' or 'warn', got {duplicates!r}")
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for e in edge_list:
        u, v = e
        if not (0 <= u < n) or not (0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            if duplicates == "error":
                raise ValueError(f"duplicate edge ({u},{v})")
            warnings.warn(f"duplicate edge ({u},{v}) dropped", stacklevel=2)
            continue
        seen.add(key)
        pairs.append(key)
    return Graph(n, pairs)


def connected_components(
    g: Graph, vertices: Iterable[int] | None = None
) -> list[frozenset[int]]:
    """Connected components of the subgraph induced on ``vertices``.

    Defaults to all of V. Components are sorted by smallest member.
    """
    if vertices is None:
        active = set(range(g.n))
    else:
        active = set(vertices)
    comps: list[frozenset[int]] = []
    remaining = set(active)
    while remaining:
        start = min(remaining)
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w in active and w not in comp:
                    comp.add(w)
                    queue.append(w)
        comps.append(frozenset(comp))
        remaining -= comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(connected_components(g)) == 1
