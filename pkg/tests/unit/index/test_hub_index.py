import math

import pytest

from prsim.exc import IndexMismatchError, ParameterError, PRSimUsageError
from prsim.graph import Graph
from prsim.index import (
    HubIndex,
    build_index,
    choose_hub_count,
    dumps,
    lookup,
    residue_threshold,
)
from prsim.pagerank import exact_lhop_rppr, reverse_pagerank, top_k_by_pagerank
from tests.common import DECAY, SQRT_C, random_graph, star, triangle_dag


@pytest.fixture
def graph():
    return random_graph(80, 0.05, seed=4)


@pytest.fixture
def pr(graph):
    return reverse_pagerank(graph, DECAY)


def test_empty_index(graph, pr):
    index = build_index(graph, pr, DECAY, 0.1, 0)
    assert len(index) == 0
    assert index.size() == 0
    assert not index.contains_hub(0)
    assert index.lookup(0, 0) == []


def test_hubs_are_the_top_pagerank_nodes(graph, pr):
    index = build_index(graph, pr, DECAY, 0.1, 9)
    assert index.hubs == top_k_by_pagerank(pr, 9)
    for w in index.hubs:
        assert w in index
        assert index.contains_hub(w)


def test_stored_tuples_are_above_r_max(graph, pr):
    index = build_index(graph, pr, DECAY, 0.1, 9)
    for w in index.hubs:
        for level, tuples in index.levels(w).items():
            assert tuples == sorted(tuples)
            assert all(index.r_max < psi <= 1 for _, psi in tuples)


def test_stored_tuples_match_exact_rppr(graph, pr):
    index = build_index(graph, pr, DECAY, 0.2, 9)
    for w in index.hubs:
        levels = index.levels(w)
        rppr = exact_lhop_rppr(graph, w, max(levels) + 3, DECAY)
        for level, values in enumerate(rppr.levels):
            stored = dict(index.lookup(w, level))
            for v, exact in values.items():
                gap = exact - stored.get(v, 0.0)
                if v in stored:
                    assert -1e-12 <= gap <= index.r_max + 1e-12
                else:
                    # dropped reserves were at most r_max themselves
                    assert gap <= 2 * index.r_max + 1e-12


def test_star_hub():
    g = star(50)
    pr = reverse_pagerank(g, DECAY)
    index = build_index(g, pr, DECAY, 0.1, 1)
    assert index.hubs == [0]
    assert index.lookup(0, 0) == [(0, pytest.approx(1 - SQRT_C))]
    leaves = index.lookup(0, 1)
    assert [v for v, _ in leaves] == list(range(1, 50))
    assert index.lookup(0, 2) == []


def test_size_is_bounded_by_pagerank(graph, pr):
    index = build_index(graph, pr, DECAY, 0.1, 15)
    per_hub = index.stats()["per_hub"]
    for w, count in per_hub.items():
        assert count <= graph.n * (pr[w] + pr.tol) / index.r_max


def test_lookup_edges(graph, pr):
    index = build_index(graph, pr, DECAY, 0.1, 3)
    w = index.hubs[0]
    assert lookup(index, w, 0) == [(w, pytest.approx(1 - SQRT_C))]
    assert lookup(index, w, 10_000) == []
    outsider = next(v for v in range(graph.n) if v not in index)
    assert lookup(index, outsider, 0) == []
    assert not index.contains_hub(outsider)


def test_stats(graph, pr):
    index = build_index(graph, pr, DECAY, 0.1, 4)
    stats = index.stats()
    assert stats["hub_count"] == 4
    assert stats["tuples"] == index.size() == sum(stats["per_hub"].values())
    assert stats["r_max"] == residue_threshold(DECAY, 0.1)
    assert stats["deepest_level"] == max(max(index.levels(w)) for w in index.hubs)


def test_threads_do_not_change_the_index(graph, pr):
    single = build_index(graph, pr, DECAY, 0.1, 12)
    pooled = build_index(graph, pr, DECAY, 0.1, 12, threads=4)
    assert dumps(single) == dumps(pooled)


def test_invalid_arguments(graph, pr):
    with pytest.raises(ParameterError):
        build_index(graph, pr, DECAY, 0.0, 1)
    with pytest.raises(ParameterError):
        build_index(graph, pr, DECAY, 0.1, graph.n + 1)
    with pytest.raises(ParameterError):
        build_index(graph, pr, 1.5, 0.1, 1)


def test_check_compatible():
    g = triangle_dag()
    index = build_index(g, reverse_pagerank(g, DECAY), DECAY, 0.1, 1)
    index.check_compatible(g, DECAY)

    with pytest.raises(IndexMismatchError) as excinfo:
        index.check_compatible(Graph.from_edges([0, 0, 1, 2], [1, 2, 2, 3]))
    assert excinfo.value.field == "n"
    assert (excinfo.value.expected, excinfo.value.actual) == (3, 4)

    with pytest.raises(IndexMismatchError) as excinfo:
        index.check_compatible(Graph.from_edges([0, 1], [1, 2]))
    assert excinfo.value.field == "m"

    with pytest.raises(IndexMismatchError) as excinfo:
        index.check_compatible(g, 0.8)
    assert excinfo.value.field == "c"


def test_repr():
    index = HubIndex(3, 2, DECAY, 0.1, 1, {0: {0: [(0, 0.2)]}})
    assert repr(index) == "HubIndex(hubs=1, tuples=1, c=0.6, eps=0.1)"


@pytest.mark.parametrize(
    "mode, expected",
    [(0, 0), (5, 5), ("7", 7), ("sqrt", 9)],
)
def test_choose_hub_count_fixed_modes(graph, pr, mode, expected):
    assert choose_hub_count(mode, graph, pr, 0.1) == expected


def test_choose_hub_count_auto_m(graph, pr):
    eps, gamma = 0.1, 2.5
    expected = math.floor(
        graph.n * (eps * graph.m / graph.n) ** (gamma / (gamma - 1))
    )
    assert choose_hub_count("auto-m", graph, pr, eps, gamma=gamma) == min(
        graph.n, expected
    )
    with pytest.raises(ParameterError):
        choose_hub_count("auto-m", graph, pr, eps)
    with pytest.raises(ParameterError):
        choose_hub_count("auto-m", graph, pr, eps, gamma=1.0)


def test_choose_hub_count_budget(graph, pr):
    eps = 0.5
    j0 = choose_hub_count("budget", graph, pr, eps)
    ranked = sorted(pr.pi, reverse=True)
    assert (graph.n / eps) * sum(ranked[:j0]) <= graph.m
    if j0 < graph.n:
        assert (graph.n / eps) * sum(ranked[: j0 + 1]) > graph.m


def test_choose_hub_count_rejects_bad_modes(graph, pr):
    with pytest.raises(ParameterError):
        choose_hub_count(graph.n + 1, graph, pr, 0.1)
    with pytest.raises(PRSimUsageError):
        choose_hub_count("most", graph, pr, 0.1)
