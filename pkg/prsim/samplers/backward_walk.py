"""
Randomized estimators of ``pi_l(., w)`` for a fixed target ``w`` and level ``l``.

Both walkers move level by level along out-edges starting from
``pi_0(w, w) = 1 - sqrt(c)``. Out-adjacency lists are sorted by target
in-degree, so each scan below stops at the first out-neighbor above its
in-degree bound instead of visiting the whole list.
"""
import logging
import math
import typing
from dataclasses import dataclass, field

from prsim.exc import ParameterError
from prsim.pagerank import check_decay

logger = logging.getLogger(__name__)


@dataclass
class BwEstimate:
    """
    :ivar target: The node ``w``
    :ivar level: The level ``l``
    :ivar values: ``{v: estimate of pi_l(v, w)}``, nonzero entries only
    :ivar increments: Number of accumulator updates the walk performed
    """

    target: int
    level: int
    values: typing.Dict[int, float] = field(default_factory=dict)
    increments: int = 0

    def as_dict(self):
        return {
            "target": self.target,
            "level": self.level,
            "values": {str(v): x for v, x in self.values.items()},
            "increments": self.increments,
        }


def simple_levels(adj, w, level, sqrt_c, rng):
    out_ptr, out_idx, in_deg = adj.out_ptr, adj.out_idx, adj.in_deg
    current = {w: 1.0 - sqrt_c}
    increments = 0
    for _ in range(level):
        upcoming: typing.Dict[int, float] = {}
        for x, value in current.items():
            bound = sqrt_c / rng.random_open()
            j, end = out_ptr[x], out_ptr[x + 1]
            while j < end and in_deg[out_idx[j]] <= bound:
                y = out_idx[j]
                upcoming[y] = upcoming.get(y, 0.0) + value
                increments += 1
                j += 1
        current = upcoming
        if not current:
            break
    return current, increments


def variance_bounded_levels(adj, w, level, sqrt_c, rng):
    out_ptr, out_idx, in_deg = adj.out_ptr, adj.out_idx, adj.in_deg
    keep = 1.0 - sqrt_c
    current = {w: keep}
    increments = 0
    for _ in range(level):
        upcoming: typing.Dict[int, float] = {}
        for x, value in current.items():
            if rng.random() >= sqrt_c:
                continue
            j, end = out_ptr[x], out_ptr[x + 1]
            # deterministic share for low in-degree out-neighbors
            bound = value / keep
            while j < end and in_deg[out_idx[j]] <= bound:
                y = out_idx[j]
                upcoming[y] = upcoming.get(y, 0.0) + value / in_deg[y]
                increments += 1
                j += 1
            # one shared coin decides the rest, each hit worth 1 - sqrt(c)
            bound = value / (rng.random_open() * keep)
            while j < end and in_deg[out_idx[j]] <= bound:
                y = out_idx[j]
                upcoming[y] = upcoming.get(y, 0.0) + keep
                increments += 1
                j += 1
        current = upcoming
        if not current:
            break
    return current, increments


def _prepare(graph, w, level, c):
    sqrt_c = math.sqrt(check_decay(c))
    if level < 0:
        raise ParameterError("l", level, "l >= 0")
    return graph.check_node(w), sqrt_c


def backward_walk_simple(graph, w, l, c, rng):  # noqa: E741
    """
    Unbiased but unbounded estimator of ``pi_l(., w)``.

    At each level every nonzero node ``x`` draws one ``r`` from ``(0, 1)`` and
    passes its whole value to the out-neighbors ``y`` with
    ``d_in(y) <= sqrt(c) / r``. A single run can overshoot ``pi_l`` by a factor
    that grows with the in-degree of the target.

    :rtype: :class:`BwEstimate`
    """
    w, sqrt_c = _prepare(graph, w, l, c)
    values, increments = simple_levels(graph.adjacency, w, l, sqrt_c, rng)
    return BwEstimate(target=w, level=l, values=values, increments=increments)


def backward_walk_vb(graph, w, l, c, rng):  # noqa: E741
    """
    Variance bounded estimator of ``pi_l(., w)``.

    At each level every nonzero node ``x`` continues with probability
    ``sqrt(c)``. Out-neighbors with ``d_in(y) <= pi(x) / (1 - sqrt(c))`` then
    receive ``pi(x) / d_in(y)`` deterministically; after drawing ``r`` from
    ``(0, 1)``, those with ``d_in(y) <= pi(x) / (r * (1 - sqrt(c)))`` receive
    ``1 - sqrt(c)``. The estimate is unbiased and ``E[est^2] <= pi_l(v, w)``.

    :param graph: The graph; out-adjacency must be in-degree sorted
    :type graph: :class:`Graph <prsim.graph.Graph>`
    :param w: The target node
    :type w: int
    :param l: The level to estimate
    :type l: int
    :param c: Decay factor
    :type c: float
    :param rng: Random stream
    :type rng: :class:`Rng <prsim.samplers.Rng>`
    :rtype: :class:`BwEstimate`
    """
    w, sqrt_c = _prepare(graph, w, l, c)
    values, increments = variance_bounded_levels(graph.adjacency, w, l, sqrt_c, rng)
    return BwEstimate(target=w, level=l, values=values, increments=increments)
