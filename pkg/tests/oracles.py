"""Independent reference implementations used to validate the library.

Everything here is written the slow, obvious way on purpose: repeated
full scans for the propagation fixpoint, union-find for connectivity,
power-set filters for the solvers, and a fully materialized family for
the axiom checks. Nothing imports the library's solver internals.
"""

from __future__ import annotations

from itertools import combinations, permutations

from zeroforcing import Graph


def naive_derive(g: Graph, s) -> frozenset[int]:
    colored = set(s)
    changed = True
    while changed:
        changed = False
        for u in sorted(colored):
            unc = [w for w in g.neighbors(u) if w not in colored]
            if len(unc) == 1:
                colored.add(unc[0])
                changed = True
                break
    return frozenset(colored)


def naive_is_forcing(g: Graph, s) -> bool:
    return len(naive_derive(g, s)) == g.n


def naive_is_connected_set(g: Graph, s) -> bool:
    verts = list(s)
    if not verts:
        return False
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        if u in parent and v in parent:
            parent[find(u)] = find(v)
    roots = {find(v) for v in verts}
    return len(roots) == 1


def naive_z(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            if naive_is_forcing(g, combo):
                return k
    raise AssertionError("unreachable")


def naive_zc(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            if naive_is_connected_set(g, combo) and naive_is_forcing(g, combo):
                return k
    raise AssertionError("unreachable")


def naive_connected_forcing_sets(g: Graph) -> set[frozenset[int]]:
    out = set()
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            if naive_is_connected_set(g, combo) and naive_is_forcing(g, combo):
                out.add(frozenset(combo))
    return out


def naive_connected_subsets(g: Graph) -> set[frozenset[int]]:
    out = set()
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            if naive_is_connected_set(g, combo):
                out.add(frozenset(combo))
    return out


def naive_axioms(ground: frozenset[int], family: set[frozenset[int]]):
    """(m1, m2, m3) for an explicitly materialized family."""
    m1 = frozenset() in family
    m2 = True
    for big in family:
        for k in range(len(big)):
            for combo in combinations(sorted(big), k):
                if frozenset(combo) not in family:
                    m2 = False
    m3 = True
    members = sorted(family, key=len)
    for k in range(len(ground) + 1):
        for a_tuple in combinations(sorted(ground), k):
            a = frozenset(a_tuple)
            inside = [x for x in members if x <= a]
            maximal = [
                x for x in inside if not any(x < y for y in inside)
            ]
            if maximal and len({len(x) for x in maximal}) > 1:
                m3 = False
    return m1, m2, m3


def complement_family(ground: frozenset[int], members) -> set[frozenset[int]]:
    return {ground - s for s in members}


def replay_forces(g: Graph, initial, forces) -> bool:
    """Check that every recorded force was legal when it happened."""
    colored = set(initial)
    for u, v in forces:
        if u not in colored or v in colored:
            return False
        unc = [w for w in g.neighbors(u) if w not in colored]
        if unc != [v]:
            return False
        colored.add(v)
    return True


def all_connected_graphs(n: int) -> list[Graph]:
    """Connected graphs on n labeled vertices, one per isomorphism class."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    perms = []
    for perm in permutations(range(n)):
        mapping = []
        for (u, v) in pairs:
            a, b = perm[u], perm[v]
            mapping.append(index[(a, b) if a < b else (b, a)])
        perms.append(mapping)
    seen: set[int] = set()
    out: list[Graph] = []
    for mask in range(1 << len(pairs)):
        if mask in seen:
            continue
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph(n, edges)
        if not _connected(g):
            continue
        for mapping in perms:
            image = 0
            m = mask
            while m:
                b = m & -m
                m ^= b
                image |= 1 << mapping[b.bit_length() - 1]
            seen.add(image)
        out.append(g)
    return out


def _connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n
