"""Blocks, articulation points, pendant paths, and graph family recognition."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, connected_components, is_connected

__all__ = [
    "BlockDecomposition",
    "PendantPath",
    "FamilyInfo",
    "block_decomposition",
    "pendant_paths",
    "pendant_path_count",
    "pendant_path_vertices",
    "classify_family",
]


def _biconnected(
    g: Graph, active: frozenset[int] | None = None
) -> tuple[list[tuple[int, ...]], set[int]]:
    """Blocks (as sorted vertex tuples) and articulation points.

    Restricted to the subgraph induced on ``active`` when given. Iterative
    DFS with an edge stack; handles several components.
    """
    if active is None:
        active = frozenset(range(g.n))
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[tuple[int, ...]] = []
    art: set[int] = set()
    counter = 0
    for root in sorted(active):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        estack: list[tuple[int, int]] = []
        work: list[tuple[int, int, object]] = [(root, -1, iter(g.neighbors(root)))]
        while work:
            v, parent, it = work[-1]
            pushed = False
            for w in it:  # type: ignore[union-attr]
                if w == parent or w not in active:
                    continue
                if w not in disc:
                    estack.append((v, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    if v == root:
                        root_children += 1
                    work.append((w, v, iter(g.neighbors(w))))
                    pushed = True
                    break
                if disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if pushed:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    comp: set[int] = set()
                    while True:
                        a, b = estack.pop()
                        comp.add(a)
                        comp.add(b)
                        if (a, b) == (u, v):
                            break
                    blocks.append(tuple(sorted(comp)))
                    if u != root:
                        art.add(u)
        if root_children >= 2:
            art.add(root)
    blocks.sort()
    return blocks, art


def _block_shape(g: Graph, block: tuple[int, ...]) -> tuple[str, bool, bool]:
    """(kind tag, is_cycle, is_clique) for one block."""
    size = len(block)
    if size == 1:
        return "clique", False, True
    if size == 2:
        # A cut edge is K2, hence also a clique for block-graph purposes.
        return "edge", False, True
    inner = 0
    for i, u in enumerate(block):
        for v in block[i + 1 :]:
            if g.has_edge(u, v):
                inner += 1
    is_clique = inner == size * (size - 1) // 2
    is_cycle = inner == size
    if is_clique:
        # K3 is simultaneously a cycle; the tag prefers clique, the flag
        # still records cycleness for cactus logic.
        return "clique", is_cycle, True
    if is_cycle:
        return "cycle", True, False
    return "other", False, False


@dataclass(frozen=True)
class BlockDecomposition:
    """Complete block structure of a connected graph."""

    blocks: tuple[tuple[int, ...], ...]
    articulation_points: frozenset[int]
    kinds: tuple[str, ...]
    cycle_flags: tuple[bool, ...]
    clique_flags: tuple[bool, ...]
    outer: tuple[bool, ...]
    depths: tuple[int, ...]
    membership: dict[int, int]

    def blocks_of(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks with kinds, outer flags, peeling depths, and membership counts."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if not is_connected(g):
        raise ValueError("block decomposition requires a connected graph")
    if g.n == 1:
        return BlockDecomposition(
            blocks=((0,),),
            articulation_points=frozenset(),
            kinds=("clique",),
            cycle_flags=(False,),
            clique_flags=(True,),
            outer=(True,),
            depths=(0,),
            membership={0: 1},
        )
    blocks, art = _biconnected(g)
    shapes = [_block_shape(g, b) for b in blocks]
    membership: dict[int, int] = {v: 0 for v in range(g.n)}
    for b in blocks:
        for v in b:
            membership[v] += 1

    # Depth by iterative peeling: repeatedly delete the non-articulation
    # vertices of the current outer blocks; a block's depth is the round
    # at which it becomes outer.
    index_of = {b: i for i, b in enumerate(blocks)}
    depths = [-1] * len(blocks)
    active = set(range(g.n))
    unassigned = len(blocks)
    round_no = 0
    while unassigned:
        cur_blocks, cur_art = _biconnected(g, frozenset(active))
        newly_outer = [b for b in cur_blocks if sum(1 for v in b if v in cur_art) <= 1]
        if not newly_outer:
            raise AssertionError("peeling stalled; decomposition bug")
        removed: set[int] = set()
        for b in newly_outer:
            depths[index_of[b]] = round_no
            unassigned -= 1
            removed.update(v for v in b if v not in cur_art)
        active -= removed
        round_no += 1

    return BlockDecomposition(
        blocks=tuple(blocks),
        articulation_points=frozenset(art),
        kinds=tuple(s[0] for s in shapes),
        cycle_flags=tuple(s[1] for s in shapes),
        clique_flags=tuple(s[2] for s in shapes),
        outer=tuple(d == 0 for d in depths),
        depths=tuple(depths),
        membership=membership,
    )


@dataclass(frozen=True)
class PendantPath:
    """A dangling path reachable from the rest of the graph only via one vertex.

    ``vertices`` runs from the base (the neighbor of ``attach_vertex``)
    to the far end, which is a leaf of the whole graph.
    """

    attach_vertex: int
    base: int
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def pendant_paths(g: Graph, v: int) -> list[PendantPath]:
    """All pendant paths attached at ``v``, sorted by base label.

    A pendant path is a component of G-v that induces a path, joined to
    ``v`` by exactly one edge landing on an end of that path.
    """
    if not is_connected(g):
        raise ValueError("pendant paths are defined on connected graphs")
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    out: list[PendantPath] = []
    rest = [u for u in range(g.n) if u != v]
    for comp in connected_components(g, rest):
        anchors = [u for u in g.neighbors(v) if u in comp]
        if len(anchors) != 1:
            continue
        base = anchors[0]
        deg_in = {u: sum(1 for w in g.neighbors(u) if w in comp) for u in comp}
        if len(comp) == 1:
            out.append(PendantPath(v, base, (base,)))
            continue
        if max(deg_in.values()) > 2:
            continue
        ends = [u for u in comp if deg_in[u] == 1]
        if len(ends) != 2 or base not in ends:
            continue
        order = [base]
        prev = None
        cur = base
        while len(order) < len(comp):
            nxt = next(
                w for w in g.neighbors(cur) if w in comp and w != prev
            )
            order.append(nxt)
            prev, cur = cur, nxt
        out.append(PendantPath(v, base, tuple(order)))
    out.sort(key=lambda p: p.base)
    return out


def pendant_path_count(g: Graph, v: int) -> int:
    return len(pendant_paths(g, v))


def pendant_path_vertices(g: Graph) -> frozenset[int]:
    """Union of the vertex sets of all pendant paths of the graph."""
    acc: set[int] = set()
    for v in range(g.n):
        for p in pendant_paths(g, v):
            acc.update(p.vertices)
    return frozenset(acc)


@dataclass(frozen=True)
class FamilyInfo:
    """Family recognition result: most specific tag plus all flags."""

    tag: str
    is_path: bool
    is_cycle: bool
    is_tree: bool
    is_unicyclic: bool
    is_cactus: bool
    is_block_graph: bool
    pendant_free: bool


def classify_family(g: Graph) -> FamilyInfo:
    """Classify a connected graph into the solver families.

    Tag precedence: path, cycle, tree, unicyclic, block_graph, cactus,
    general. All applicable flags are reported alongside the tag.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if not is_connected(g):
        raise ValueError("family classification requires a connected graph")
    degrees = [g.degree(v) for v in range(g.n)]
    max_deg = max(degrees) if degrees else 0
    is_tree = g.m == g.n - 1
    is_path = is_tree and max_deg <= 2
    is_cycle = g.n >= 3 and all(d == 2 for d in degrees)
    is_unicyclic = g.m == g.n
    dec = block_decomposition(g)
    is_cactus = all(
        len(b) == 2 or cyc for b, cyc in zip(dec.blocks, dec.cycle_flags)
    )
    is_block_graph = all(dec.clique_flags)
    pendant_free = all(pendant_path_count(g, v) == 0 for v in range(g.n))
    if is_path:
        tag = "path"
    elif is_cycle:
        tag = "cycle"
    elif is_tree:
        tag = "tree"
    elif is_unicyclic:
        tag = "unicyclic"
    elif is_block_graph:
        tag = "block_graph"
    elif is_cactus:
        tag = "cactus"
    else:
        tag = "general"
    return FamilyInfo(
        tag=tag,
        is_path=is_path,
        is_cycle=is_cycle,
        is_tree=is_tree,
        is_unicyclic=is_unicyclic,
        is_cactus=is_cactus,
        is_block_graph=is_block_graph,
        pendant_free=pendant_free,
    )
