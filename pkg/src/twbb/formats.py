"""Graph and decomposition file formats.

Readers: DIMACS coloring files (``.col``, ``p edge`` header with ``e u v``
lines) and PACE treewidth graphs (``.gr``, ``p tw`` header with bare edge
lines).  Writers: PACE graphs and PACE tree decompositions (``.td``).
All formats are 1-indexed on disk; graphs in memory are 0-indexed.
"""

from __future__ import annotations

import logging

from .decomposition import TreeDecomposition
from .graph import Graph

__all__ = [
    "ParseError",
    "parse_dimacs_col",
    "parse_pace_gr",
    "parse_pace_td",
    "write_pace_gr",
    "write_pace_td",
]

log = logging.getLogger("twbb.formats")


class ParseError(ValueError):
    """Malformed input file; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _parse_graph(text: str, fmt_tokens: tuple[str, ...], edge_prefix: str | None) -> Graph:
    n = None
    declared_m = None
    edges = set()
    loops_ok_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate problem header")
            if len(parts) != 4 or parts[1] not in fmt_tokens:
                raise ParseError(lineno, f"malformed problem header: {line!r}")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(lineno, f"malformed problem header: {line!r}")
            if n < 0 or declared_m < 0:
                raise ParseError(lineno, f"negative counts in header: {line!r}")
            continue
        if edge_prefix is not None:
            if parts[0] != edge_prefix:
                raise ParseError(lineno, f"unrecognized line: {line!r}")
            parts = parts[1:]
        if len(parts) != 2:
            raise ParseError(lineno, f"expected an edge line, got: {line!r}")
        if n is None:
            raise ParseError(lineno, "edge line before problem header")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer endpoint: {line!r}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(lineno, f"endpoint out of range 1..{n}: {line!r}")
        if u == v:
            raise ParseError(lineno, f"self-loop on vertex {u}")
        a, b = (u - 1, v - 1) if u < v else (v - 1, u - 1)
        edges.add((a, b))
    if n is None:
        raise ParseError(1, "missing problem header")
    if declared_m != len(edges):
        log.warning(
            "header declares %d edges but %d distinct edges parsed",
            declared_m,
            len(edges),
        )
    return Graph(n, sorted(edges))


def parse_dimacs_col(text: str) -> Graph:
    """Parse a DIMACS coloring file; duplicate edges are merged."""
    return _parse_graph(text, ("edge", "edges", "col"), "e")


def parse_pace_gr(text: str) -> Graph:
    """Parse a PACE treewidth graph file; duplicate edges are merged."""
    return _parse_graph(text, ("tw",), None)


def write_pace_gr(g: Graph) -> str:
    """Serialize a graph in PACE form; inactive vertices become isolated."""
    lines = [f"p tw {g.n} {g.num_edges()}"]
    for u, v in g.edges():
        lines.append(f"{u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def write_pace_td(td: TreeDecomposition, n: int) -> str:
    """Serialize a tree decomposition in PACE form.

    n is the vertex count of the underlying graph, recorded in the header.
    """
    max_bag = max((len(b) for b in td.bags), default=0)
    lines = [f"s td {len(td.bags)} {max_bag} {n}"]
    for i, bag in enumerate(td.bags, start=1):
        inside = " ".join(str(v + 1) for v in sorted(bag))
        lines.append(f"b {i} {inside}".rstrip())
    for a, b in td.tree_edges:
        lines.append(f"{a + 1} {b + 1}")
    return "\n".join(lines) + "\n"


def parse_pace_td(text: str) -> tuple[TreeDecomposition, int]:
    """Parse a PACE tree decomposition; returns (decomposition, graph n)."""
    header = None
    bags: dict[int, frozenset[int]] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "s":
            if header is not None:
                raise ParseError(lineno, "duplicate solution header")
            if len(parts) != 5 or parts[1] != "td":
                raise ParseError(lineno, f"malformed solution header: {line!r}")
            try:
                header = tuple(int(x) for x in parts[2:])
            except ValueError:
                raise ParseError(lineno, f"malformed solution header: {line!r}")
            continue
        if header is None:
            raise ParseError(lineno, "content before solution header")
        num_bags, _max_bag, n = header
        if parts[0] == "b":
            if len(parts) < 2:
                raise ParseError(lineno, f"malformed bag line: {line!r}")
            try:
                bag_id = int(parts[1])
                inside = [int(x) for x in parts[2:]]
            except ValueError:
                raise ParseError(lineno, f"malformed bag line: {line!r}")
            if not (1 <= bag_id <= num_bags):
                raise ParseError(lineno, f"bag id out of range: {bag_id}")
            if bag_id in bags:
                raise ParseError(lineno, f"duplicate bag {bag_id}")
            if any(not (1 <= v <= n) for v in inside):
                raise ParseError(lineno, f"bag vertex out of range 1..{n}")
            bags[bag_id] = frozenset(v - 1 for v in inside)
            continue
        if len(parts) != 2:
            raise ParseError(lineno, f"expected a tree edge line, got: {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer bag id: {line!r}")
        if not (1 <= a <= num_bags and 1 <= b <= num_bags):
            raise ParseError(lineno, f"tree edge out of range: {line!r}")
        edges.append((a - 1, b - 1))
    if header is None:
        raise ParseError(1, "missing solution header")
    num_bags, _max_bag, n = header
    missing = [i for i in range(1, num_bags + 1) if i not in bags]
    if missing:
        raise ParseError(1, f"bag {missing[0]} never defined")
    ordered = tuple(bags[i] for i in range(1, num_bags + 1))
    return TreeDecomposition(ordered, tuple(edges)), n
