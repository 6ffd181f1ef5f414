"""Upper-bound heuristics: greedy orders and the randomized-restart wrapper."""

import pytest

from conftest import clique, complete_bipartite, cycle, grid, path, star
from twbb import (
    Graph,
    GraphError,
    HeuristicConfig,
    best_upper_bound,
    max_cardinality_order,
    min_fill_order,
    min_width_order,
    mycielski,
    width_of_order,
)
from twbb.heuristics import EliminationOrder
from twbb.oracle import exact_treewidth


def test_elimination_order_behaves_like_a_sequence():
    o = EliminationOrder((2, 0, 1), 1)
    assert len(o) == 3
    assert list(o) == [2, 0, 1]
    assert o[0] == 2


def test_config_validation():
    with pytest.raises(GraphError):
        HeuristicConfig("no-such-heuristic")
    with pytest.raises(GraphError):
        HeuristicConfig("min-fill", runs=0)


def test_min_fill_is_exact_on_chordal_graphs():
    # zero-fill vertices always exist in a chordal graph, so the greedy
    # order has width equal to the treewidth
    for g in (path(6), star(4), clique(5), Graph(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (5, 6), (4, 6)])):
        assert min_fill_order(g).width == exact_treewidth(g).treewidth


def test_min_fill_known_widths():
    assert min_fill_order(cycle(5)).width == 2
    assert min_fill_order(complete_bipartite(2, 3)).width == 2
    assert min_fill_order(grid(3, 3)).width == 3
    assert min_fill_order(mycielski(cycle(5))).width == 5


def test_min_fill_tie_breaks_to_lowest_id():
    assert min_fill_order(path(3)).vertices == (0, 1, 2)
    assert min_fill_order(clique(4)).vertices == (0, 1, 2, 3)


def test_min_width_known_widths():
    assert min_width_order(cycle(5)).width == 2
    assert min_width_order(grid(3, 3)).width == 3
    # width is measured with fill even though removal skips it
    assert min_width_order(cycle(4)).width == 2


def test_max_cardinality_order():
    o = max_cardinality_order(grid(3, 3))
    assert o.width == 3
    # the search visits first what the elimination order does last
    o = max_cardinality_order(cycle(5), start=3)
    assert o.vertices[-1] == 3
    assert max_cardinality_order(cycle(5)).vertices[-1] == 0
    # trees are chordal, so the order is perfect
    assert max_cardinality_order(star(6)).width == 1
    assert max_cardinality_order(path(7)).width == 1


def test_orders_are_permutations_with_true_widths():
    for fn in (min_fill_order, min_width_order, max_cardinality_order):
        for g in (cycle(6), grid(2, 4), complete_bipartite(3, 3), Graph(3, [])):
            o = fn(g)
            assert sorted(o.vertices) == list(g.vertices)
            assert width_of_order(g, o.vertices) == o.width


def test_best_upper_bound_deterministic_and_no_worse():
    g = mycielski(cycle(5))
    single = min_fill_order(g).width
    w1, o1 = best_upper_bound(g, HeuristicConfig("min-fill", runs=8, seed=3))
    w2, o2 = best_upper_bound(g, HeuristicConfig("min-fill", runs=8, seed=3))
    assert (w1, o1.vertices) == (w2, o2.vertices)
    assert w1 <= single
    assert width_of_order(g, o1.vertices) == w1


def test_best_upper_bound_first_run_matches_plain_heuristic():
    g = grid(3, 3)
    w, order = best_upper_bound(g, HeuristicConfig("min-width", runs=1, seed=9))
    assert (w, order.vertices) == (
        min_width_order(g).width,
        min_width_order(g).vertices,
    )


def test_best_upper_bound_empty_graph():
    w, order = best_upper_bound(Graph(0, []), HeuristicConfig("min-fill"))
    assert w == 0 and order.vertices == ()
