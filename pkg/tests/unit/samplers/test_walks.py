import pytest

from prsim.evaluation import exact_eta, exact_simrank
from prsim.exc import NodeOutOfRangeError
from prsim.samplers import Rng, WalkOutcome, eta_sample, sample_walk, walks_meet
from tests.common import DECAY, SQRT_C, random_graph, std_error, two_cycle, two_node


def test_positions_follow_in_edges():
    g = random_graph(40, 0.1, seed=2)
    rng = Rng(0)
    for _ in range(500):
        walk = sample_walk(g, 3, DECAY, rng)
        assert walk.positions[0] == 3
        for a, b in zip(walk.positions, walk.positions[1:]):
            assert b in g.in_neighbors(a)
        if walk.terminal is not None:
            assert walk.terminal == walk.positions[-1]
            assert walk.steps == len(walk.positions) - 1


def test_walk_from_node_without_in_neighbors():
    # 0 has no in-neighbors: the walk stops in place or evaporates
    rng = Rng(1)
    outcomes = [sample_walk(two_node(), 0, DECAY, rng) for _ in range(4000)]
    assert all(w.positions == (0,) for w in outcomes)
    stopped = sum(w.terminal == 0 for w in outcomes)
    evaporated = sum(w.terminal is None for w in outcomes)
    assert stopped + evaporated == len(outcomes)
    p = 1 - SQRT_C
    assert abs(stopped / len(outcomes) - p) <= 4 * std_error(p, len(outcomes))


def test_step_count_is_geometric():
    # a 2-cycle never evaporates, so P(steps = k) = sqrt(c)^k (1 - sqrt(c))
    rng = Rng(2)
    trials = 20_000
    steps = [sample_walk(two_cycle(), 0, DECAY, rng).steps for _ in range(trials)]
    for k in range(4):
        p = SQRT_C**k * (1 - SQRT_C)
        observed = sum(s == k for s in steps) / trials
        assert abs(observed - p) <= 4 * std_error(p, trials)


def test_evaporated_walk_has_no_steps():
    walk = WalkOutcome(positions=(1, 0), terminal=None)
    assert walk.steps is None
    assert walk.as_dict() == {"positions": [1, 0], "terminal": None, "steps": None}


def test_same_seed_same_walk():
    g = random_graph(40, 0.1, seed=2)
    a = [sample_walk(g, 5, DECAY, Rng(11)) for _ in range(3)]
    b = [sample_walk(g, 5, DECAY, Rng(11)) for _ in range(3)]
    assert a == b


@pytest.mark.parametrize(
    "a, b, from_step, expected",
    [
        ((0, 1, 2), (0, 3, 2), 1, True),
        ((0, 1, 2), (0, 3, 4), 1, False),
        ((0, 1), (0, 3), 0, True),
        ((0, 1), (0, 3), 1, False),
        ((0, 1, 2, 5), (4, 1), 1, True),
        ((0, 1, 2, 5), (4, 3), 0, False),
    ],
)
def test_walks_meet(a, b, from_step, expected):
    wa, wb = WalkOutcome(a, a[-1]), WalkOutcome(b, b[-1])
    assert walks_meet(wa, wb, from_step) is expected


def test_eta_is_one_without_in_neighbors():
    rng = Rng(3)
    assert all(eta_sample(two_node(), 0, DECAY, rng) for _ in range(200))


@pytest.mark.parametrize("w", [0, 1])
def test_eta_on_two_cycle(w):
    g = two_cycle()
    expected = exact_eta(g, exact_simrank(g, DECAY), w, DECAY)
    assert expected == pytest.approx(1 - DECAY)
    rng = Rng(4)
    trials = 20_000
    observed = sum(eta_sample(g, w, DECAY, rng) for _ in range(trials)) / trials
    assert abs(observed - expected) <= 3 * std_error(expected, trials)


def test_eta_matches_exact_on_random_graph():
    g = random_graph(25, 0.15, seed=6)
    exact = exact_simrank(g, DECAY)
    rng = Rng(5)
    trials = 10_000
    for w in (0, 7, 19):
        expected = exact_eta(g, exact, w, DECAY)
        observed = sum(eta_sample(g, w, DECAY, rng) for _ in range(trials)) / trials
        assert abs(observed - expected) <= 4 * std_error(expected, trials)


def test_invalid_node():
    with pytest.raises(NodeOutOfRangeError):
        sample_walk(two_node(), 5, DECAY, Rng(0))
