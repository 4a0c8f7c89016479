import io
import math

import numpy as np
import pytest

from prsim.exc import ParameterError
from prsim.graph import Graph
from prsim.pagerank import (
    PageRankVector,
    reverse_pagerank,
    top_k_by_pagerank,
    truncation_length,
    write_pagerank_tsv,
)
from tests.common import random_graph, star, two_cycle, two_node


def test_two_node_values():
    pr = reverse_pagerank(two_node(), 0.64)
    assert pr[0] == pytest.approx(0.18)
    assert pr[1] == pytest.approx(0.10)


def test_single_node_keeps_only_the_first_term():
    g = Graph.from_edges([], [], n=1)
    pr = reverse_pagerank(g, 0.64)
    assert pr[0] == pytest.approx(1 - math.sqrt(0.64))


def test_mass_is_sub_stochastic():
    for seed in range(4):
        pr = reverse_pagerank(random_graph(50, 0.05, seed=seed), 0.6, tol=1e-9)
        assert pr.pi.min() >= 0
        assert pr.pi.sum() <= 1 + 1e-9


def test_mass_is_conserved_without_dangling_nodes():
    pr = reverse_pagerank(two_cycle(), 0.6, tol=1e-10)
    assert pr.pi.sum() == pytest.approx(1.0, abs=1e-10)


def test_iterations_follow_tolerance():
    expected = math.ceil(math.log(1e-9) / math.log(math.sqrt(0.64)))
    assert truncation_length(0.64, 1e-9) == expected
    pr = reverse_pagerank(two_node(), 0.64, tol=1e-9)
    assert pr.iterations == truncation_length(0.64, 1e-9)
    assert pr.tol == 1e-9


def test_deterministic():
    g = random_graph(60, 0.05, seed=9)
    a = reverse_pagerank(g, 0.6)
    b = reverse_pagerank(g, 0.6)
    assert a.pi.tobytes() == b.pi.tobytes()


def test_invalid_arguments():
    with pytest.raises(ParameterError):
        reverse_pagerank(two_node(), 0.0)
    with pytest.raises(ParameterError):
        reverse_pagerank(two_node(), 0.6, tol=0)


def test_top_k_ties_by_id():
    pr = PageRankVector(pi=np.array([0.3, 0.3, 0.1]), tol=1e-9, iterations=1)
    assert top_k_by_pagerank(pr, 2) == [0, 1]
    assert top_k_by_pagerank(pr, 0) == []
    assert sorted(top_k_by_pagerank(pr, 3)) == [0, 1, 2]
    with pytest.raises(ParameterError):
        top_k_by_pagerank(pr, 4)


def test_star_hub_is_the_center():
    pr = reverse_pagerank(star(10), 0.6)
    assert top_k_by_pagerank(pr, 1) == [0]


def test_write_tsv_descending_with_original_ids():
    g = star(4)
    pr = reverse_pagerank(g, 0.6)
    out = io.StringIO()
    write_pagerank_tsv(g, pr, out)
    rows = [line.split("\t") for line in out.getvalue().splitlines()]
    assert rows[0][0] == "1"
    assert [r[0] for r in rows[1:]] == ["2", "3", "4"]
    values = [float(r[1]) for r in rows]
    assert values == sorted(values, reverse=True)


def test_write_tsv_values_are_plain_numbers():
    g = star(4)
    pr = reverse_pagerank(g, 0.6)
    out = io.StringIO()
    write_pagerank_tsv(g, pr, out)
    for line in out.getvalue().splitlines():
        node, value = line.split("\t")
        assert float(value) == pr[g.dense_id(int(node))]
        assert not value.startswith("np.")
