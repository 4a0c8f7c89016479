"""
Seeded synthetic graphs.

Every generator is deterministic in its seed. Power-law graphs follow the
Chung-Lu model: node ``i`` gets the weight ``w_i ~ (i + 1)^(-1/gamma)``,
scaled so the weights average to the requested degree, and an edge ``i -> j``
appears with probability ``1 - exp(-w_i * w_j / W)`` with ``W = sum(w)``,
which is ``min(1, w_i * w_j / W)`` up to second order. The cumulative degree
tail then decays as ``k^(-gamma)``.
"""
import logging
import typing
from dataclasses import dataclass

import numpy as np

from prsim.exc import ParameterError, PRSimUsageError
from prsim.graph import Graph

logger = logging.getLogger(__name__)

KINDS = ("powerlaw", "er", "star", "cycle", "bw-counterexample")


@dataclass(frozen=True)
class GenSpec:
    """
    :param kind: One of ``powerlaw``, ``er``, ``star``, ``cycle`` and
        ``bw-counterexample``
    :param n: Number of nodes; for ``bw-counterexample`` the number of middle
        nodes, the graph has ``n + 2``
    :param gamma: Cumulative power-law exponent, ``powerlaw`` only
    :param avg_degree: Average out-degree, ``powerlaw`` and ``er``
    :param p: Edge probability, ``er`` only; takes precedence over
        ``avg_degree``
    :param seed: Generator seed
    """

    kind: str
    n: int
    gamma: typing.Optional[float] = None
    avg_degree: typing.Optional[float] = None
    p: typing.Optional[float] = None
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise PRSimUsageError(
                f"unknown graph kind {self.kind!r}, "
                f"expected one of {', '.join(KINDS)}"
            )
        min_n = 1 if self.kind == "bw-counterexample" else 2
        if not self.n >= min_n:
            raise ParameterError("n", self.n, f"n >= {min_n}")
        if self.kind == "powerlaw":
            if self.gamma is None or not self.gamma >= 1:
                raise ParameterError("gamma", self.gamma, "gamma >= 1")
            if self.avg_degree is None or not 0 < self.avg_degree < self.n:
                raise ParameterError(
                    "avg_degree", self.avg_degree, "0 < avg_degree < n"
                )
        if self.kind == "er":
            if self.p is None and self.avg_degree is None:
                raise PRSimUsageError("er graphs need p or avg_degree")
            if self.p is not None and not 0 <= self.p <= 1:
                raise ParameterError("p", self.p, "0 <= p <= 1")
            if self.p is None and not 0 <= self.avg_degree <= self.n - 1:
                raise ParameterError(
                    "avg_degree", self.avg_degree, "0 <= avg_degree <= n-1"
                )


def gen_powerlaw(spec):
    """
    Chung-Lu graph with power-law degree tail ``spec.gamma``.

    The number of edge draws is Poisson with mean ``W``; both endpoints of
    every draw are picked in proportion to the weights. Self-loops and repeated
    draws are dropped.
    """
    n = spec.n
    rng = np.random.default_rng(spec.seed)
    weights = np.arange(1, n + 1, dtype=np.float64) ** (-1.0 / spec.gamma)
    weights *= spec.avg_degree * n / weights.sum()
    total = weights.sum()
    draws = int(rng.poisson(total))
    prob = weights / total
    src = rng.choice(n, size=draws, p=prob)
    dst = rng.choice(n, size=draws, p=prob)
    keep = src != dst
    graph = Graph.from_edges(src[keep], dst[keep], n=n)
    logger.info(
        f"Chung-Lu graph n={n} gamma={spec.gamma} avg_degree={spec.avg_degree}: "
        f"m={graph.m}"
    )
    return graph


def _pair_from_offset(offsets, n):
    src = offsets // (n - 1)
    dst = offsets % (n - 1)
    dst += dst >= src
    return src, dst


def gen_er(spec):
    """
    Directed ``G(n, p)``. Without ``spec.p`` the probability is
    ``avg_degree / (n - 1)``.
    """
    n = spec.n
    p = spec.p if spec.p is not None else spec.avg_degree / (n - 1)
    rng = np.random.default_rng(spec.seed)
    pairs = n * (n - 1)
    m = int(rng.binomial(pairs, p))
    offsets = np.sort(rng.choice(pairs, size=m, replace=False))
    src, dst = _pair_from_offset(offsets, n)
    graph = Graph.from_edges(src, dst, n=n, dedupe=False)
    logger.info(f"G(n, p) graph n={n} p={p:.3g}: m={graph.m}")
    return graph


def gen_star(n):
    """
    Edges ``1 -> j`` for ``j = 2..n``. Nodes keep the original ids ``1..n``.
    """
    if not n >= 2:
        raise ParameterError("n", n, "n >= 2")
    dst = np.arange(1, n)
    return Graph.from_edges(
        np.zeros(n - 1, dtype=np.int64), dst, n=n, original_ids=np.arange(1, n + 1)
    )


def gen_cycle(n):
    """
    Edges ``i -> (i + 1) mod n``.
    """
    if not n >= 2:
        raise ParameterError("n", n, "n >= 2")
    src = np.arange(n)
    return Graph.from_edges(src, (src + 1) % n, n=n)


def gen_bw_counterexample(n):
    """
    Node ``0`` is ``w``, node ``1`` is ``v`` and nodes ``2..n+1`` are the middle
    layer ``x_i``, with edges ``w -> x_i`` and ``x_i -> v``. A simple backward
    walk from ``v`` has unbounded variance on this graph.
    """
    if not n >= 1:
        raise ParameterError("n", n, "n >= 1")
    middle = np.arange(2, n + 2)
    src = np.concatenate((np.zeros(n, dtype=np.int64), middle))
    dst = np.concatenate((middle, np.ones(n, dtype=np.int64)))
    return Graph.from_edges(src, dst, n=n + 2)


def symmetrize(graph):
    """
    The graph with every edge present in both directions.
    """
    src, dst = graph.edges()
    return Graph.from_edges(
        src, dst, n=graph.n, original_ids=graph.original_ids, undirected=True
    )


def fit_tail_exponent(graph, min_degree=None, min_count=10):
    """
    Estimate ``gamma`` in ``P(d_out >= k) ~ k^(-gamma)`` by least squares on
    the log-log cumulative out-degree distribution.

    :param min_degree: Smallest degree included in the fit; defaults to the
        average degree
    :param min_count: Degrees reached by fewer nodes are left out of the fit
    """
    degrees = np.asarray(graph.out_deg)
    if min_degree is None:
        min_degree = max(1, int(np.ceil(degrees.mean())))
    values, counts = np.unique(degrees[degrees > 0], return_counts=True)
    ccdf = np.cumsum(counts[::-1])[::-1]
    mask = (values >= min_degree) & (ccdf >= min_count)
    if mask.sum() < 2:
        raise PRSimUsageError("degree tail has too few points to fit an exponent")
    tail = np.log(ccdf[mask] / len(degrees))
    slope, _ = np.polyfit(np.log(values[mask]), tail, 1)
    return float(-slope)


def generate(spec):
    """
    Build the graph described by a :class:`GenSpec`.
    """
    if spec.kind == "powerlaw":
        return gen_powerlaw(spec)
    if spec.kind == "er":
        return gen_er(spec)
    if spec.kind == "star":
        return gen_star(spec.n)
    if spec.kind == "cycle":
        return gen_cycle(spec.n)
    return gen_bw_counterexample(spec.n)
