"""Reading and writing coloring graphs, PACE graphs, and decompositions."""

import logging
import random

import pytest
from conftest import clique, cycle, grid, path
from twbb import (
    Graph,
    ParseError,
    TreeDecomposition,
    build_decomposition,
    parse_dimacs_col,
    parse_pace_gr,
    parse_pace_td,
    validate_decomposition,
    write_pace_gr,
    write_pace_td,
)

COL_K3 = """c a triangle
p edge 3 3
e 1 2
e 2 3
e 1 3
"""


def test_parse_col():
    g = parse_dimacs_col(COL_K3)
    assert g == clique(3)


def test_parse_col_header_variants():
    for token in ("edge", "edges", "col"):
        g = parse_dimacs_col(f"p {token} 2 1\ne 1 2\n")
        assert g.n == 2 and g.has_edge(0, 1)


def test_duplicate_edges_merge():
    g = parse_dimacs_col("p edge 2 3\ne 1 2\ne 1 2\ne 2 1\n")
    assert g.num_edges() == 1


def test_edge_count_mismatch_warns(caplog):
    with caplog.at_level(logging.WARNING, logger="twbb.formats"):
        parse_dimacs_col("p edge 2 3\ne 1 2\n")
    assert any("declares 3 edges but 1" in m for m in caplog.messages)
    caplog.clear()
    with caplog.at_level(logging.WARNING, logger="twbb.formats"):
        parse_dimacs_col("p edge 2 1\ne 1 2\n")
    assert not caplog.messages


def test_parse_gr():
    g = parse_pace_gr("c path\np tw 3 2\n1 2\n2 3\n\n")
    assert g == path(3)


@pytest.mark.parametrize(
    "text,lineno",
    [
        ("p edge 2 1\ne 1 1\n", 2),
        ("p edge 2 1\ne 1 3\n", 2),
        ("p edge 2 1\ne 1 x\n", 2),
        ("e 1 2\np edge 2 1\n", 1),
        ("", 1),
        ("c nothing\n", 1),
        ("p edge 2 1\np edge 2 1\n", 2),
        ("p foo 2 1\ne 1 2\n", 1),
        ("p edge -1 0\n", 1),
        ("p edge 2 1\nx 1 2\n", 2),
    ],
)
def test_col_errors(text, lineno):
    with pytest.raises(ParseError) as info:
        parse_dimacs_col(text)
    assert info.value.line == lineno
    assert f"line {lineno}:" in str(info.value)


def test_gr_errors():
    with pytest.raises(ParseError):
        parse_pace_gr("p tw 3 2\n1 2 3\n")
    with pytest.raises(ParseError):
        parse_pace_gr("p edge 3 2\n1 2\n")


def test_gr_round_trip():
    rng = random.Random(3)
    graphs = [clique(5), cycle(7), grid(3, 4), Graph(4, []), Graph(0, [])]
    for _ in range(20):
        n = rng.randint(1, 12)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        graphs.append(Graph(n, [e for e in pairs if rng.random() < 0.3]))
    for g in graphs:
        assert parse_pace_gr(write_pace_gr(g)) == g


def test_gr_write_inactive_vertices():
    g = cycle(4).eliminate(0)
    text = write_pace_gr(g)
    assert text.splitlines()[0] == "p tw 4 3"
    back = parse_pace_gr(text)
    assert set(back.edges()) == set(g.edges())


def test_td_round_trip():
    for g in (cycle(4), grid(2, 3), clique(5)):
        td = build_decomposition(g, sorted(g.vertices))
        back, n = parse_pace_td(write_pace_td(td, g.n))
        assert back == td and n == g.n
        assert validate_decomposition(g, back)


def test_td_edgeless_header():
    g = Graph(3, [])
    td = build_decomposition(g, (0, 1, 2))
    text = write_pace_td(td, 3)
    lines = text.splitlines()
    assert lines[0] == "s td 3 1 3"
    assert lines[1:4] == ["b 1 1", "b 2 2", "b 3 3"]
    back, n = parse_pace_td(text)
    assert back == td and n == 3


def test_td_empty():
    td = TreeDecomposition((), ())
    text = write_pace_td(td, 0)
    assert text == "s td 0 0 0\n"
    back, n = parse_pace_td(text)
    assert back == td and n == 0


def test_td_empty_bag_round_trips():
    td = TreeDecomposition((frozenset(), frozenset({0})), ((0, 1),))
    back, n = parse_pace_td(write_pace_td(td, 1))
    assert back == td and n == 1


@pytest.mark.parametrize(
    "text",
    [
        "b 1 1\ns td 1 1 1\n",
        "s td 1 1 1\ns td 1 1 1\nb 1 1\n",
        "s td x 1 1\nb 1 1\n",
        "s td 1 1\nb 1 1\n",
        "s td 1 1 1\nb 1 1\nb 1 1\n",
        "s td 1 1 1\nb 2 1\n",
        "s td 1 1 1\nb 1 5\n",
        "s td 2 1 1\nb 1 1\nb 2 1\n1 3\n",
        "s td 1 1 1\nb 1 1\n1 2 3\n",
        "s td 2 1 1\nb 1 1\n",
        "",
    ],
)
def test_td_errors(text):
    with pytest.raises(ParseError):
        parse_pace_td(text)
