"""Triangulations and tree decompositions built from elimination orders.

An elimination order of width w yields a tree decomposition of width w:
triangulate the graph along the order, take one bag per vertex (the vertex
plus its later neighbors in the triangulation), and hang each bag on the
bag of its earliest later neighbor.  ``validate_decomposition`` checks the
result independently and is used to vouch for every decomposition this
package emits.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, GraphError, bits, clique_in_masks, _eliminate_in_place
from .heuristics import EliminationOrder, max_cardinality_order

__all__ = [
    "TreeDecomposition",
    "ValidationReport",
    "build_decomposition",
    "is_chordal",
    "is_perfect_elimination_order",
    "merge_contained_bags",
    "triangulate",
    "validate_decomposition",
]


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed by node id plus the edges of the bag tree."""

    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        """Max bag size minus one; -1 for the empty decomposition."""
        if not self.bags:
            return -1
        return max(len(b) for b in self.bags) - 1


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate_decomposition; falsy when invalid."""

    valid: bool
    problem: str | None = None

    def __bool__(self) -> bool:
        return self.valid


def _order_vertices(order) -> tuple[int, ...]:
    if isinstance(order, EliminationOrder):
        return order.vertices
    return tuple(order)


def _check_permutation(g: Graph, vs: tuple[int, ...]) -> None:
    seen = 0
    for v in vs:
        if not 0 <= v < g.n or not g.has_vertex(v) or (seen >> v) & 1:
            raise GraphError(f"order is not a permutation of the active vertices: {vs}")
        seen |= 1 << v
    if seen != g.active_mask:
        raise GraphError(f"order is not a permutation of the active vertices: {vs}")


def triangulate(g: Graph, order) -> Graph:
    """Add the fill edges produced by eliminating along ``order``.

    The result contains g, is chordal, and has ``order`` as a perfect
    elimination order.
    """
    vs = _order_vertices(order)
    _check_permutation(g, vs)
    adj = list(g._adj)
    fills = []
    for v in vs:
        nb = adj[v]
        rest = nb
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            for w in bits(rest & ~adj[u]):
                fills.append((u, w))
        _eliminate_in_place(adj, v)
    return g.with_edges(fills) if fills else g


def is_perfect_elimination_order(g: Graph, order) -> bool:
    """True when each vertex is simplicial among the vertices after it."""
    vs = _order_vertices(order)
    _check_permutation(g, vs)
    remaining = g.active_mask
    adj = g._adj
    for v in vs:
        remaining &= ~(1 << v)
        if not clique_in_masks(adj, adj[v] & remaining):
            return False
    return True


def is_chordal(g: Graph) -> bool:
    """Max-cardinality-search chordality test."""
    if not g.active_mask:
        return True
    order = max_cardinality_order(g)
    return is_perfect_elimination_order(g, order.vertices)


def build_decomposition(g: Graph, order) -> TreeDecomposition:
    """Turn an elimination order into a tree decomposition of equal width.

    Bag i holds order[i] plus its later neighbors in the triangulation.
    Bag i attaches to the bag of its earliest later neighbor; a bag with
    no later neighbor attaches to the next bag so the tree stays connected
    even when the graph is not.
    """
    vs = _order_vertices(order)
    _check_permutation(g, vs)
    if not vs:
        return TreeDecomposition((), ())
    h = triangulate(g, vs)
    pos = {v: i for i, v in enumerate(vs)}
    bags = []
    edges = []
    for i, v in enumerate(vs):
        later = [u for u in bits(h._adj[v]) if pos[u] > i]
        bags.append(frozenset((v, *later)))
        if i < len(vs) - 1:
            parent = min((pos[u] for u in later), default=i + 1)
            edges.append((i, parent))
    return TreeDecomposition(tuple(bags), tuple(edges))


def validate_decomposition(g: Graph, td: TreeDecomposition) -> ValidationReport:
    """Independently check a decomposition against its graph.

    Checks, in order: the bag graph is a tree, every bag holds only active
    vertices, every active vertex appears in some bag, every edge lies
    inside some bag, and each vertex's bags induce a connected subtree.
    The report names the first violation found.
    """
    bags = [frozenset(b) for b in td.bags]
    nb = len(bags)
    edges = list(td.tree_edges)

    if nb == 0:
        if edges:
            return ValidationReport(False, "tree_edges given but there are no bags")
    else:
        seen = set()
        tree_adj: list[list[int]] = [[] for _ in range(nb)]
        for a, b in edges:
            if not (0 <= a < nb and 0 <= b < nb) or a == b:
                return ValidationReport(
                    False, f"tree edge ({a}, {b}) does not join two distinct bags"
                )
            key = (min(a, b), max(a, b))
            if key in seen:
                return ValidationReport(False, f"duplicate tree edge {key}")
            seen.add(key)
            tree_adj[a].append(b)
            tree_adj[b].append(a)
        if len(edges) != nb - 1:
            return ValidationReport(
                False,
                f"tree_edges do not form a tree: {len(edges)} edges for {nb} bags",
            )
        reached = {0}
        queue = deque([0])
        while queue:
            a = queue.popleft()
            for b in tree_adj[a]:
                if b not in reached:
                    reached.add(b)
                    queue.append(b)
        if len(reached) != nb:
            return ValidationReport(False, "tree_edges do not form a connected tree")

    active = set(g.vertices)
    for i, bag in enumerate(bags):
        foreign = bag - active
        if foreign:
            return ValidationReport(
                False, f"bag {i} contains non-vertex {min(foreign)}"
            )
    in_bags: dict[int, set[int]] = {v: set() for v in active}
    for i, bag in enumerate(bags):
        for v in bag:
            in_bags[v].add(i)
    for v in g.vertices:
        if not in_bags[v]:
            return ValidationReport(False, f"vertex {v} is in no bag")

    for u, v in g.edges():
        if not (in_bags[u] & in_bags[v]):
            return ValidationReport(False, f"edge ({u}, {v}) is not inside any bag")

    for v in g.vertices:
        nodes = in_bags[v]
        start = next(iter(nodes))
        reached = {start}
        queue = deque([start])
        while queue:
            a = queue.popleft()
            for b in tree_adj[a]:
                if b in nodes and b not in reached:
                    reached.add(b)
                    queue.append(b)
        if reached != nodes:
            return ValidationReport(
                False, f"bags containing vertex {v} do not form a connected subtree"
            )

    return ValidationReport(True, None)


def merge_contained_bags(td: TreeDecomposition) -> TreeDecomposition:
    """Contract tree edges whose one endpoint bag contains the other.

    Optional compaction: the result is still a valid decomposition of the
    same graph with the same or smaller width, usually with fewer bags.
    """
    bags = {i: frozenset(b) for i, b in enumerate(td.bags)}
    adj: dict[int, set[int]] = {i: set() for i in bags}
    for a, b in td.tree_edges:
        adj[a].add(b)
        adj[b].add(a)
    changed = True
    while changed:
        changed = False
        for a in sorted(bags):
            for b in sorted(adj[a]):
                small, big = (a, b) if bags[a] <= bags[b] else (b, a)
                if not bags[small] <= bags[big]:
                    continue
                for c in adj[small] - {big}:
                    adj[c].discard(small)
                    adj[c].add(big)
                    adj[big].add(c)
                adj[big].discard(small)
                del bags[small], adj[small]
                changed = True
                break
            if changed:
                break
    index = {old: new for new, old in enumerate(sorted(bags))}
    new_bags = tuple(bags[old] for old in sorted(bags))
    new_edges = tuple(
        (index[a], index[b]) for a in sorted(adj) for b in sorted(adj[a]) if a < b
    )
    return TreeDecomposition(new_bags, new_edges)
