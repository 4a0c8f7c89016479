"""
Query accuracy evaluation and the synthetic timing sweeps.
"""
import csv
import logging
import statistics
import typing
from dataclasses import astuple, dataclass, fields

import numpy as np

from prsim import config
from prsim.evaluation.metrics import (
    EvalReport,
    EvalRow,
    avg_error_at_k,
    build_pool,
    precision_at_k,
    top_by,
)
from prsim.evaluation.oracles import (
    exact_simrank,
    ground_truth_pair_count,
    mc_pair_simrank,
    mc_single_source,
)
from prsim.graphgen import GenSpec, generate, symmetrize
from prsim.index import build_index, choose_hub_count
from prsim.pagerank import reverse_pagerank
from prsim.query import QueryParams, single_source, single_source_batch
from prsim.samplers import Rng

logger = logging.getLogger(__name__)

GROUND_TRUTH_ERROR = 1e-5
GROUND_TRUTH_CONFIDENCE = 0.99999


def random_sources(graph, count, seed):
    """
    ``min(count, n)`` distinct nodes drawn uniformly with the given seed.
    """
    rng = np.random.default_rng(seed)
    return rng.choice(graph.n, size=min(count, graph.n), replace=False).tolist()


class _PairTruth:
    """
    Lazily computed pairwise Monte Carlo ground truth for one source.
    """

    def __init__(self, graph, u, c, n_pairs, rng):
        self._graph = graph
        self._u = u
        self._c = c
        self._n_pairs = n_pairs
        self._rng = rng
        self._cache = {}

    def get(self, v, default=0.0):
        if v not in self._cache:
            self._cache[v] = mc_pair_simrank(
                self._graph, self._u, v, self._c, self._n_pairs, self._rng
            )
        return self._cache[v]


def evaluate_queries(
    graph,
    index,
    sources,
    params,
    k,
    seed=0,
    include_baseline=True,
    exact=None,
    gt_pairs=None,
    cap=None,
):
    """
    Grade PRSim queries against ground truth on a pool of candidate nodes.

    For each source the pool is the union of the top-``k`` of PRSim and, with
    ``include_baseline``, of the Monte Carlo baseline. Ground truth comes from
    the exact oracle when ``graph.n`` is within ``cap``; otherwise from pairwise
    Monte Carlo with ``gt_pairs`` walk pairs per pool node, by default enough
    for an error of ``1e-5`` at confidence ``0.99999``.

    :param sources: Dense ids of the query nodes
    :type sources: list of int
    :param params: Query parameters
    :type params: :class:`QueryParams <prsim.query.QueryParams>`
    :param k: Size of each top-k list
    :type k: int
    :param exact: Precomputed exact SimRank of ``graph``
    :type exact: :class:`ExactSimRank <prsim.evaluation.ExactSimRank>`, optional
    :rtype: :class:`EvalReport <prsim.evaluation.EvalReport>`
    """
    if cap is None:
        cap = config.get_exact_cap()
    if exact is None and graph.n <= cap:
        exact = exact_simrank(graph, params.c, cap=cap)
    if exact is None and gt_pairs is None:
        gt_pairs = ground_truth_pair_count(
            GROUND_TRUTH_ERROR, GROUND_TRUTH_CONFIDENCE
        )
        logger.warning(
            f"n={graph.n} is above the exact oracle cap, "
            f"using {gt_pairs} Monte Carlo pairs per pool node"
        )

    streams = Rng(seed).spawn(3 * len(sources))
    report = EvalReport()
    for i, u in enumerate(sources):
        query_rng, baseline_rng, truth_rng = streams[3 * i : 3 * i + 3]
        est = single_source(graph, index, u, params, query_rng)
        results = [est]
        if include_baseline:
            results.append(
                mc_single_source(
                    graph, u, params.c, params.eps, params.delta, baseline_rng
                )
            )
        pool = build_pool(results, k)
        if exact is not None:
            truth = exact.row(u)
        else:
            truth = _PairTruth(graph, u, params.c, gt_pairs, truth_rng)

        size = min(k, len(pool))
        if size == 0:
            logger.info(f"source {u}: empty pool, nothing to grade")
            continue
        truth_top = top_by(truth, pool, size)
        est_top = top_by(est, pool, size)
        report.add(
            EvalRow(
                source=graph.original_id(u),
                k=size,
                avg_error=avg_error_at_k(truth, est, truth_top),
                precision=precision_at_k(truth_top, est_top),
                micros=est.stats.micros,
                samples=est.stats.samples,
                vb_walks=est.stats.vb_walks,
            )
        )
    return report


@dataclass(frozen=True)
class SweepSettings:
    """
    Query and index settings shared by every point of a sweep.
    """

    c: float = 0.6
    eps: float = 0.2
    delta: float = 0.0001
    sample_scale: float = 1.0
    hubs: typing.Union[int, str] = "sqrt"
    queries: int = 100
    threads: int = 1


@dataclass
class SweepRow:
    param: str
    value: float
    seed: int
    n: int
    m: int
    hubs: int
    index_tuples: int
    build_micros: int
    mean_query_micros: float


SWEEP_HEADER = tuple(f.name for f in fields(SweepRow))


def sweep_point(graph, param, value, seed, settings, gamma=None):
    """
    Build an index on ``graph`` and time ``settings.queries`` random queries.

    :rtype: :class:`SweepRow`
    """
    pr = reverse_pagerank(graph, settings.c)
    j0 = choose_hub_count(settings.hubs, graph, pr, settings.eps, gamma=gamma)
    index = build_index(
        graph, pr, settings.c, settings.eps, j0, threads=settings.threads
    )
    params = QueryParams(
        n=graph.n,
        c=settings.c,
        eps=settings.eps,
        delta=settings.delta,
        sample_scale=settings.sample_scale,
    )
    sources = random_sources(graph, settings.queries, seed)
    results = single_source_batch(
        graph, index, sources, params, seed, threads=settings.threads
    )
    mean = statistics.fmean(r.stats.micros for r in results) if results else 0.0
    logger.info(f"{param}={value} seed={seed}: mean query {mean:.0f} us")
    return SweepRow(
        param=param,
        value=value,
        seed=seed,
        n=graph.n,
        m=graph.m,
        hubs=j0,
        index_tuples=index.size(),
        build_micros=index.build_micros,
        mean_query_micros=mean,
    )


def sweep_gamma(n, avg_degree, gammas, seeds, settings):
    """
    Query time against the power-law exponent on undirected Chung-Lu graphs.
    """
    rows = []
    for gamma in gammas:
        for seed in seeds:
            spec = GenSpec("powerlaw", n, gamma=gamma, avg_degree=avg_degree, seed=seed)
            graph = symmetrize(generate(spec))
            rows.append(sweep_point(graph, "gamma", gamma, seed, settings, gamma=gamma))
    return rows


def sweep_scale(ns, gamma, avg_degree, seeds, settings):
    """
    Query time against the number of nodes at a fixed exponent.
    """
    rows = []
    for n in ns:
        for seed in seeds:
            spec = GenSpec("powerlaw", n, gamma=gamma, avg_degree=avg_degree, seed=seed)
            graph = symmetrize(generate(spec))
            rows.append(sweep_point(graph, "n", n, seed, settings, gamma=gamma))
    return rows


def sweep_degree(n, degrees, seeds, settings):
    """
    Query time and index size against the average degree of ``G(n, p)`` graphs.
    """
    rows = []
    for avg_degree in degrees:
        for seed in seeds:
            graph = generate(GenSpec("er", n, avg_degree=avg_degree, seed=seed))
            rows.append(sweep_point(graph, "avg_degree", avg_degree, seed, settings))
    return rows


def write_sweep_csv(rows, f):
    writer = csv.writer(f, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row in rows:
        writer.writerow(astuple(row))
