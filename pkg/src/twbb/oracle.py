"""Reference treewidth computation for small graphs.

Two independent methods: a dynamic program over vertex subsets, and (for
cross-validation of the DP itself) brute-force enumeration of elimination
orders.  These exist to pin down expected values in tests; they share no
code with the solver beyond the Graph type.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graph import Graph, GraphError, bits

DEFAULT_DP_LIMIT = 14
DEFAULT_ENUM_LIMIT = 9


@dataclass(frozen=True)
class OracleResult:
    treewidth: int
    order: tuple[int, ...]


def exact_treewidth(g: Graph, limit: int = DEFAULT_DP_LIMIT) -> OracleResult:
    """Exact treewidth by dynamic programming over elimination prefixes.

    opt(S) is the best achievable maximum elimination degree over orders
    of the prefix set S, where a vertex's elimination degree counts the
    vertices outside the prefix reachable from it through the prefix.
    opt(all vertices) is the treewidth; an optimal order is rebuilt by
    retracing argmin choices.
    """
    verts = g.vertices
    k = len(verts)
    if k > limit:
        raise GraphError(f"graph has {k} vertices; oracle limit is {limit}")
    if k == 0:
        return OracleResult(0, ())
    # Work in a compacted index space 0..k-1 so the DP table is dense.
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * k
    for u, v in g.edges():
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]

    full = (1 << k) - 1

    def elim_degree(prefix: int, v: int) -> int:
        # Vertices outside prefix+{v} reachable from v through the prefix.
        comp = 1 << v
        frontier = comp
        seen_nb = 0
        while frontier:
            grow = 0
            for w in bits(frontier):
                grow |= adj[w]
            seen_nb |= grow
            frontier = (grow & prefix) & ~comp
            comp |= frontier
        return (seen_nb & ~prefix & ~(1 << v)).bit_count()

    opt = [0] * (1 << k)
    choice = [0] * (1 << k)
    for s in range(1, 1 << k):
        best = None
        best_v = -1
        rest = s
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            prev = s ^ low
            cost = opt[prev]
            d = elim_degree(prev, v)
            if d > cost:
                cost = d
            if best is None or cost < best:
                best = cost
                best_v = v
        opt[s] = best
        choice[s] = best_v

    order = []
    s = full
    while s:
        v = choice[s]
        order.append(verts[v])
        s ^= 1 << v
    order.reverse()
    return OracleResult(opt[full], tuple(order))


def exact_treewidth_permutations(g: Graph, limit: int = DEFAULT_ENUM_LIMIT) -> int:
    """Exact treewidth by trying every elimination order.

    Exists only to validate the subset DP; unusable beyond ~9 vertices.
    """
    verts = g.vertices
    k = len(verts)
    if k > limit:
        raise GraphError(f"graph has {k} vertices; enumeration limit is {limit}")
    if k == 0:
        return 0
    base = list(g._adj)
    best = k - 1  # width of any order is at most n-1
    for perm in permutations(verts):
        adj = list(base)
        worst = 0
        for v in perm:
            nb = adj[v]
            d = nb.bit_count()
            if d > worst:
                worst = d
                if worst >= best:
                    break
            bv = 1 << v
            for u in bits(nb):
                adj[u] = (adj[u] | nb) & ~((1 << u) | bv)
            adj[v] = 0
        if worst < best:
            best = worst
    return best
