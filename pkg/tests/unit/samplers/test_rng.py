import pytest

from prsim.samplers import Rng


def draws(rng, count):
    return [rng.random() for _ in range(count)]


def test_same_seed_same_stream():
    assert draws(Rng(42), 10) == draws(Rng(42), 10)
    assert draws(Rng(42), 10) != draws(Rng(43), 10)


def test_block_size_does_not_change_the_stream():
    assert draws(Rng(7, block_size=3), 10) == draws(Rng(7), 10)


def test_values_in_unit_interval():
    rng = Rng(1)
    values = draws(rng, 10_000)
    assert all(0.0 <= x < 1.0 for x in values)
    assert sum(values) / len(values) == pytest.approx(0.5, abs=0.02)


def test_random_open_redraws_zero():
    rng = Rng(0)
    rng._block, rng._pos = [0.0, 0.0, 0.25], 0
    assert rng.random_open() == 0.25


def test_below():
    rng = Rng(3)
    values = [rng.below(5) for _ in range(5000)]
    assert set(values) == {0, 1, 2, 3, 4}
    assert all(Rng(s).below(1) == 0 for s in range(10))


def test_below_never_reaches_k():
    rng = Rng(0)
    rng._block, rng._pos = [0.9999999999999999], 0
    assert rng.below(3) == 2


def test_spawn_is_reproducible():
    a = [draws(child, 5) for child in Rng(9).spawn(3)]
    b = [draws(child, 5) for child in Rng(9).spawn(3)]
    assert a == b
    assert a[0] != a[1] != a[2]


def test_spawned_streams_differ_from_parent():
    parent = Rng(9)
    (child,) = parent.spawn(1)
    assert draws(child, 5) != draws(Rng(9), 5)


def test_repr():
    assert repr(Rng(5)).startswith("Rng(entropy=5, spawn_key=()")
