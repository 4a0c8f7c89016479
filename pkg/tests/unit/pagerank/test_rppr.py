import math

import numpy as np
import pytest

from prsim.exc import ParameterError
from prsim.graph import Graph
from prsim.pagerank import (
    exact_hitting_probabilities,
    exact_lhop_rppr,
    reverse_pagerank,
    transition_matrix,
)
from tests.common import dense_rppr, random_graph, triangle_dag, two_node


def test_two_node_levels():
    rppr = exact_lhop_rppr(two_node(), 0, 3, 0.64)
    assert rppr.get(0, 0) == pytest.approx(0.2)
    assert rppr.get(1, 1) == pytest.approx(0.16)
    # node 0 has no in-neighbors, so every walk has ended by level 2
    assert rppr.get(1, 2) == 0.0
    assert rppr.get(0, 9) == 0.0


def test_only_the_target_reaches_a_sink():
    # walks from 0 evaporate at once and walks from 1 step onto 0, never 1
    rppr = exact_lhop_rppr(two_node(), 1, 3, 0.64)
    assert rppr.levels[0] == {1: pytest.approx(0.2)}
    assert rppr.total() == pytest.approx(0.2)


def test_triangle_levels():
    rppr = exact_lhop_rppr(triangle_dag(), 1, 3, 0.64)
    assert rppr.get(2, 1) == pytest.approx(0.08)
    rppr = exact_lhop_rppr(triangle_dag(), 0, 3, 0.64)
    assert rppr.get(2, 2) == pytest.approx(0.064)


def test_level_zero_is_the_target_only():
    g = random_graph(30, 0.1, seed=1)
    rppr = exact_lhop_rppr(g, 4, 2, 0.6)
    assert rppr.levels[0] == {4: pytest.approx(1 - math.sqrt(0.6))}


def test_values_are_probabilities():
    g = random_graph(30, 0.1, seed=2)
    for w in range(0, 30, 7):
        levels = dense_rppr(exact_lhop_rppr(g, w, 20, 0.6), g.n)
        assert levels.min() >= 0.0
        assert levels.max() <= 1.0


def test_dangling_nodes_are_zero_past_level_zero():
    g = Graph.from_edges([0, 0, 1], [1, 2, 2])
    rppr = exact_lhop_rppr(g, 0, 4, 0.6)
    for level in range(1, 5):
        assert rppr.get(0, level) == 0.0


def test_hitting_probabilities():
    c = 0.64
    h = exact_hitting_probabilities(two_node(), 0, 2, c)
    assert h[0][0] == pytest.approx(1.0)
    assert h[1][1] == pytest.approx(0.8)
    rppr = exact_lhop_rppr(two_node(), 0, 2, c)
    assert rppr.hitting(1, 1) == pytest.approx(0.8)


def test_invalid_arguments():
    with pytest.raises(ParameterError):
        exact_lhop_rppr(two_node(), 0, 2, 1.0)
    with pytest.raises(ParameterError):
        exact_lhop_rppr(two_node(), 0, -1, 0.6)


def test_transition_matrix_rows():
    P = transition_matrix(triangle_dag()).toarray()
    assert P.tolist() == [[0, 0, 0], [1, 0, 0], [0.5, 0.5, 0]]


@pytest.mark.parametrize("seed", range(3))
def test_sum_of_rppr_matches_reverse_pagerank(seed):
    g = random_graph(40, 0.08, seed=seed)
    c, tol = 0.6, 1e-9
    pr = reverse_pagerank(g, c, tol=tol)
    for w in range(g.n):
        rppr = exact_lhop_rppr(g, w, pr.iterations, c)
        assert rppr.total() / g.n == pytest.approx(pr[w], abs=2 * tol)


def test_total_is_n_times_pagerank_without_dangling_nodes():
    # a cycle has no dangling nodes and pi = 1/n everywhere
    n = 5
    g = Graph.from_edges(np.arange(n), (np.arange(n) + 1) % n)
    rppr = exact_lhop_rppr(g, 2, 200, 0.6)
    assert rppr.total() == pytest.approx(1.0, abs=1e-9)
