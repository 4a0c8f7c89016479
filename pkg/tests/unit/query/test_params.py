import math

import pytest

from prsim.exc import ParameterError
from prsim.query import QueryParams


def test_defaults():
    params = QueryParams(n=100)
    assert (params.c, params.eps, params.delta, params.sample_scale) == (
        0.6,
        0.1,
        0.0001,
        1.0,
    )


def test_derived_counts():
    params = QueryParams(n=1000, c=0.6, eps=0.1, delta=0.0001)
    c1 = 12 / (1 - math.sqrt(0.6)) ** 2
    assert params.c1 == pytest.approx(c1)
    assert params.d_r == math.ceil(c1 / 0.01)
    assert params.f_r == math.ceil(3 * math.log(1000 / 0.0001)) == 49
    assert params.n_r == params.d_r * params.f_r
    assert params.eta_pi_threshold == pytest.approx(0.1 / c1)


def test_sample_scale_shrinks_rounds_not_their_number():
    full = QueryParams(n=1000, eps=0.2)
    small = QueryParams(n=1000, eps=0.2, sample_scale=0.01)
    assert small.d_r == math.ceil(0.01 * full.c1 / 0.04)
    assert small.f_r == full.f_r


def test_counts_never_drop_below_one():
    params = QueryParams(n=1, eps=0.99, delta=0.99, sample_scale=1e-9)
    assert params.d_r == 1
    assert params.f_r == 1


@pytest.mark.parametrize(
    "field, value",
    [
        ("n", 0),
        ("c", 0.0),
        ("c", 1.0),
        ("eps", 0.0),
        ("eps", 1.0),
        ("delta", 0.0),
        ("delta", 1.5),
        ("sample_scale", 0.0),
    ],
)
def test_validation(field, value):
    kwargs = {"n": 10, field: value}
    with pytest.raises(ParameterError) as excinfo:
        QueryParams(**kwargs)
    assert excinfo.value.name == field
    assert excinfo.value.value == value


def test_frozen():
    params = QueryParams(n=10)
    with pytest.raises(AttributeError):
        params.eps = 0.3


def test_from_config_default_profile():
    params = QueryParams.from_config(50)
    assert params == QueryParams(n=50, c=0.6, eps=0.1, delta=0.0001)


def test_from_config_smoke_profile():
    params = QueryParams.from_config(50, profile="smoke")
    assert (params.eps, params.delta, params.sample_scale) == (0.2, 0.01, 0.01)


def test_from_config_overrides():
    params = QueryParams.from_config(50, eps=0.3, delta=None)
    assert params.eps == 0.3
    assert params.delta == 0.0001
