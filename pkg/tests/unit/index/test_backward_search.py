import math

import pytest

from prsim.exc import NodeOutOfRangeError, ParameterError
from prsim.index import backward_search, residue_threshold
from prsim.pagerank import exact_lhop_rppr
from tests.common import DECAY, SQRT_C, random_graph, star, triangle_dag, two_node


def assert_within_r_max(graph, w, r_max, c):
    result = backward_search(graph, w, r_max, c)
    rppr = exact_lhop_rppr(graph, w, len(result.reserves) + 3, c)
    for level, values in enumerate(rppr.levels):
        for v in range(graph.n):
            gap = values.get(v, 0.0) - result.reserve(v, level)
            assert -1e-12 <= gap <= r_max + 1e-12, (v, level, gap)
    return result


def test_threshold_blocks_every_push():
    result = backward_search(triangle_dag(), 2, 1.0, 0.64)
    assert result.reserves == [{2: pytest.approx(0.2)}]
    assert result.pushes == 0


def test_seed_settles_when_threshold_is_large():
    result = backward_search(two_node(), 1, 5.0, 0.64)
    assert result.reserve(1, 0) == pytest.approx(0.2)
    assert result.reserve(0, 1) == 0.0


def test_two_node_push():
    result = backward_search(two_node(), 0, 0.01, 0.64)
    # 0 has an out-edge to 1, so pushing from 0 only reaches level 1 at node 1
    assert result.reserve(0, 0) == pytest.approx(0.2)
    assert result.reserve(1, 1) == pytest.approx(0.16)
    assert result.pushes == 2


@pytest.mark.parametrize("w", [0, 1])
def test_two_node_within_r_max(w):
    assert_within_r_max(two_node(), w, 0.01, 0.64)


@pytest.mark.parametrize("seed", range(4))
@pytest.mark.parametrize("eps", [0.5, 0.1])
def test_random_graphs_within_r_max(seed, eps):
    g = random_graph(60, 0.06, seed=seed)
    r_max = residue_threshold(DECAY, eps)
    for w in range(0, g.n, 11):
        assert_within_r_max(g, w, r_max, DECAY)


def test_star_within_r_max():
    g = star(50)
    r_max = residue_threshold(DECAY, 0.1)
    for w in (0, 1, 49):
        assert_within_r_max(g, w, r_max, DECAY)


def test_leftover_residues_are_below_threshold():
    g = random_graph(60, 0.06, seed=7)
    r_max = residue_threshold(DECAY, 0.2)
    result = backward_search(g, 3, r_max, DECAY)
    for level in result.residues:
        assert all(0 < r <= r_max for r in level.values())


def test_reserves_never_exceed_one():
    g = random_graph(40, 0.1, seed=3)
    result = backward_search(g, 5, 1e-4, DECAY)
    assert all(0 < psi <= 1 for level in result.reserves for psi in level.values())


def test_star_center_reaches_every_leaf_once():
    g = star(20)
    result = backward_search(g, 0, 1e-6, DECAY)
    assert len(result.reserves) == 2
    assert result.reserves[0] == {0: pytest.approx(1 - SQRT_C)}
    assert result.reserves[1] == {
        v: pytest.approx(SQRT_C * (1 - SQRT_C)) for v in range(1, 20)
    }


def test_leaf_target_has_nothing_to_push_to():
    result = backward_search(star(20), 5, 1e-6, DECAY)
    assert result.reserves == [{5: pytest.approx(1 - SQRT_C)}]


def test_deterministic():
    g = random_graph(50, 0.08, seed=11)
    a = backward_search(g, 7, 1e-3, DECAY)
    b = backward_search(g, 7, 1e-3, DECAY)
    assert a.reserves == b.reserves
    assert a.residues == b.residues


def test_residue_threshold():
    assert residue_threshold(0.64, 0.12) == pytest.approx(0.04 * 0.01)
    assert residue_threshold(DECAY, 1.0) == pytest.approx(
        (1 - math.sqrt(DECAY)) ** 2 / 12
    )


def test_invalid_arguments():
    with pytest.raises(ParameterError):
        backward_search(two_node(), 0, 0.0, 0.6)
    with pytest.raises(ParameterError):
        backward_search(two_node(), 0, 0.1, 0.0)
    with pytest.raises(NodeOutOfRangeError):
        backward_search(two_node(), 2, 0.1, 0.6)
