"""Structural vertex sets, cycle contexts, and lower bounds.

The sets R1/R2/R3 partition the articulation points of a connected
non-path graph by how removal splits it and whether a pendant path
hangs there; L keeps all-but-one pendant-path bases per vertex, and
M = R2 | R3 | L is contained in every connected forcing set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .blocks import pendant_paths, pendant_path_vertices, BlockDecomposition
from .graphs import Graph, connected_components, is_connected

__all__ = [
    "StructuralSets",
    "CycleContext",
    "structural_sets",
    "cycle_context",
    "lower_bounds",
]


@dataclass(frozen=True)
class StructuralSets:
    r1: frozenset[int]
    r2: frozenset[int]
    r3: frozenset[int]
    l_set: frozenset[int]
    m_set: frozenset[int]
    p: dict[int, int] = field(repr=False)
    excluded_base_per_vertex: dict[int, int] = field(repr=False)


def _reject_paths(g: Graph, what: str) -> None:
    if g.m == g.n - 1 and all(g.degree(v) <= 2 for v in range(g.n)):
        raise ValueError(f"{what} is undefined on path graphs")


def structural_sets(g: Graph) -> StructuralSets:
    """Compute R1, R2, R3, L, M and the per-vertex pendant-path counts.

    The omitted base at each vertex is the base of its longest pendant
    path, ties broken by smallest base label. The choice never affects
    |L|.
    """
    if not is_connected(g):
        raise ValueError("structural sets require a connected graph")
    _reject_paths(g, "the structural decomposition")

    r1: set[int] = set()
    r2: set[int] = set()
    r3: set[int] = set()
    l_set: set[int] = set()
    p: dict[int, int] = {}
    excluded: dict[int, int] = {}
    for v in range(g.n):
        paths = pendant_paths(g, v)
        p[v] = len(paths)
        kappa = len(connected_components(g, [u for u in range(g.n) if u != v]))
        if kappa == 2:
            if p[v] == 1:
                r1.add(v)
            elif p[v] == 0:
                r2.add(v)
        elif kappa >= 3:
            r3.add(v)
        if paths:
            omitted = min(paths, key=lambda q: (-len(q.vertices), q.base))
            excluded[v] = omitted.base
            l_set.update(q.base for q in paths if q is not omitted)
    return StructuralSets(
        r1=frozenset(r1),
        r2=frozenset(r2),
        r3=frozenset(r3),
        l_set=frozenset(l_set),
        m_set=frozenset(r2 | r3 | l_set),
        p=p,
        excluded_base_per_vertex=excluded,
    )


class CycleContext:
    """A cycle with a fixed traversal direction and its articulation points.

    The direction (called counterclockwise throughout) starts at the
    smallest-labeled cycle vertex and moves toward its smaller-labeled
    cycle neighbor. ``articulation_list`` holds the articulation points
    in traversal order.
    """

    __slots__ = ("cycle_vertices", "articulation_list", "_pos")

    def __init__(self, cycle_vertices: tuple[int, ...], articulation_list: tuple[int, ...]):
        self.cycle_vertices = cycle_vertices
        self.articulation_list = articulation_list
        self._pos = {v: i for i, v in enumerate(cycle_vertices)}

    def __len__(self) -> int:
        return len(self.cycle_vertices)

    def index(self, u: int) -> int:
        return self._pos[u]

    def ccw_neighbor(self, u: int) -> int:
        cyc = self.cycle_vertices
        return cyc[(self._pos[u] + 1) % len(cyc)]

    def cw_neighbor(self, u: int) -> int:
        cyc = self.cycle_vertices
        return cyc[(self._pos[u] - 1) % len(cyc)]

    def segment(self, u: int, v: int) -> tuple[int, ...]:
        """Vertices strictly between u and v in traversal order.

        ``segment(u, u)`` is the whole cycle except u.
        """
        cyc = self.cycle_vertices
        size = len(cyc)
        i = self._pos[u]
        j = self._pos[v]
        out = []
        k = (i + 1) % size
        while k != j:
            out.append(cyc[k])
            k = (k + 1) % size
        return tuple(out)

    def __repr__(self) -> str:
        return (
            f"CycleContext(cycle={self.cycle_vertices!r}, "
            f"articulation={self.articulation_list!r})"
        )


def _order_cycle(g: Graph, members: frozenset[int]) -> tuple[int, ...]:
    start = min(members)
    nbrs = sorted(w for w in g.neighbors(start) if w in members)
    if len(nbrs) != 2:
        raise ValueError("supplied vertex set does not induce a simple cycle")
    order = [start, nbrs[0]]
    while True:
        cur, prev = order[-1], order[-2]
        nxt = [w for w in g.neighbors(cur) if w in members and w != prev]
        if len(nxt) != 1:
            raise ValueError("supplied vertex set does not induce a simple cycle")
        if nxt[0] == start:
            break
        order.append(nxt[0])
    if len(order) != len(members):
        raise ValueError("supplied vertex set does not induce a simple cycle")
    return tuple(order)


def cycle_context(g: Graph, cycle: frozenset[int] | None = None) -> CycleContext:
    """Extract the cycle of a unicyclic graph, or orient a given cycle block.

    Articulation points on the cycle are exactly its vertices with
    graph degree above two (the cycle block is chordless).
    """
    if not is_connected(g):
        raise ValueError("cycle context requires a connected graph")
    if cycle is None:
        if g.m == g.n - 1:
            raise ValueError("graph has no cycle")
        if g.m > g.n:
            raise ValueError("graph has more than one cycle")
        deg = [g.degree(v) for v in range(g.n)]
        leaves = [v for v in range(g.n) if deg[v] == 1]
        alive = [True] * g.n
        while leaves:
            v = leaves.pop()
            alive[v] = False
            for w in g.neighbors(v):
                if alive[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        leaves.append(w)
        members = frozenset(v for v in range(g.n) if alive[v])
    else:
        members = frozenset(cycle)
        for v in members:
            if sum(1 for w in g.neighbors(v) if w in members) != 2:
                raise ValueError("supplied vertex set does not induce a simple cycle")
    order = _order_cycle(g, members)
    art = tuple(v for v in order if g.degree(v) > 2)
    return CycleContext(order, art)


def lower_bounds(
    g: Graph, d: BlockDecomposition, ss: StructuralSets
) -> tuple[int, int]:
    """Two lower bounds for the connected forcing number.

    ``bound_m`` is |M|. ``bound_blocks`` sums the minimum induced degree
    over blocks that are not cut edges of pendant paths, then corrects
    for articulation points in R2 | R3 shared between blocks.
    """
    if not is_connected(g):
        raise ValueError("lower bounds require a connected graph")
    _reject_paths(g, "the block lower bound")
    pendant_verts = pendant_path_vertices(g)
    total = 0
    for block in d.blocks:
        if len(block) == 2 and (block[0] in pendant_verts or block[1] in pendant_verts):
            continue
        bset = set(block)
        total += min(sum(1 for w in g.neighbors(v) if w in bset) for v in block)
    correction = sum(d.membership[v] - 1 for v in ss.r2 | ss.r3)
    return len(ss.m_set), total - correction
