"""
Single-source SimRank queries.

SimRank decomposes over the node ``w`` where two reverse walks meet for the
last time,

    s(u, v) = sum_l sum_w pi_l(u, w) * pi_l(v, w) * eta(w) / (1 - sqrt(c))^2,

and the query splits that sum by whether ``w`` is a hub. Walks from ``u``
sample ``eta(w) * pi_l(u, w)``. For hub targets the precomputed index lists
supply ``pi_l(v, w)``; for the remaining targets a variance bounded backward
walk estimates it on the fly, and a median over independent rounds tames the
estimate.
"""
import logging
import typing
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from prsim.exc import PRSimUsageError
from prsim.index import HubIndex
from prsim.query.response import ScoreVector
from prsim.samplers.backward_walk import variance_bounded_levels
from prsim.samplers.rng import Rng
from prsim.samplers.walks import eta_trial, walk_path
from prsim.utils import Timer

logger = logging.getLogger(__name__)


class QueryLogAdapter(logging.LoggerAdapter):
    """
    Stuff the query source into log records so that interleaved queries from a
    batch stay distinguishable.
    """

    def process(self, msg, kwargs):
        return "[source:{}] {}".format(self.extra["source"], msg), kwargs


@dataclass
class QueryStats:
    """
    Counters of one query.

    :ivar samples: Walks sampled from the source
    :ivar terminated: Of those, walks that terminated
    :ivar evaporated: Of those, walks that evaporated at a node without in-neighbors
    :ivar eta_successes: Terminated walks whose two follow-up walks did not meet
    :ivar hub_hits: Successes on hub targets, answered by the index
    :ivar vb_walks: Successes on other targets, answered by a backward walk
    :ivar vb_increments: Accumulator updates across all backward walks
    :ivar index_lists_read: Hub index lists that passed the threshold
    :ivar micros: Wall time in microseconds
    """

    samples: int = 0
    terminated: int = 0
    evaporated: int = 0
    eta_successes: int = 0
    hub_hits: int = 0
    vb_walks: int = 0
    vb_increments: int = 0
    index_lists_read: int = 0
    micros: int = 0

    def absorb(self, other):
        for name in (
            "samples",
            "terminated",
            "evaporated",
            "eta_successes",
            "hub_hits",
            "vb_walks",
            "vb_increments",
        ):
            setattr(self, name, getattr(self, name) + getattr(other, name))

    def summary(self):
        return (
            f"samples={self.samples} evaporated={self.evaporated} "
            f"vb_walks={self.vb_walks} hub_hits={self.hub_hits} "
            f"micros={self.micros}"
        )


@dataclass
class _Round:
    counts: typing.Dict[typing.Tuple[int, int], int] = field(default_factory=dict)
    walk_part: typing.Dict[int, float] = field(default_factory=dict)
    stats: QueryStats = field(default_factory=QueryStats)


def _run_round(adj, u, params, index, rng):
    sqrt_c = params.sqrt_c
    stop = 1.0 - sqrt_c
    scale = 1.0 / ((1.0 - sqrt_c) ** 2 * params.d_r)
    out = _Round()
    stats = out.stats
    counts = out.counts
    walk_part = out.walk_part

    for _ in range(params.d_r):
        stats.samples += 1
        positions, terminated = walk_path(adj, u, stop, rng)
        if not terminated:
            stats.evaporated += 1
            continue
        stats.terminated += 1
        w = positions[-1]
        level = len(positions) - 1
        if not eta_trial(adj, w, stop, rng):
            continue
        stats.eta_successes += 1
        key = (w, level)
        counts[key] = counts.get(key, 0) + 1
        if index.contains_hub(w):
            stats.hub_hits += 1
            continue
        values, increments = variance_bounded_levels(adj, w, level, sqrt_c, rng)
        stats.vb_walks += 1
        stats.vb_increments += increments
        for v, x in values.items():
            walk_part[v] = walk_part.get(v, 0.0) + x * scale
    return out


def _median_over_rounds(rounds):
    touched = sorted({v for r in rounds for v in r.walk_part})
    if not touched:
        return {}
    position = {v: i for i, v in enumerate(touched)}
    table = np.zeros((len(touched), len(rounds)))
    for i, r in enumerate(rounds):
        for v, x in r.walk_part.items():
            table[position[v], i] = x
    medians = np.median(table, axis=1)
    return {v: float(m) for v, m in zip(touched, medians) if m != 0.0}


def single_source(graph, index, u, params, rng, threads=1):
    """
    Approximate ``s(u, v)`` for every ``v``.

    Every estimate is within ``params.eps`` of the exact SimRank with
    probability at least ``1 - params.delta``, when ``params.sample_scale`` is 1.

    :param graph: The graph
    :type graph: :class:`Graph <prsim.graph.Graph>`
    :param index: Hub index built on ``graph`` with the same decay factor
    :type index: :class:`HubIndex <prsim.index.HubIndex>`
    :param u: The source node
    :type u: int
    :param params: Query parameters, ``params.n`` must equal ``graph.n``
    :type params: :class:`QueryParams <prsim.query.QueryParams>`
    :param rng: Random stream. Each round draws from its own child stream, so the
        result depends on the stream but not on ``threads``.
    :type rng: :class:`Rng <prsim.samplers.Rng>`
    :param threads: Worker threads for the independent rounds
    :type threads: int
    :rtype: :class:`ScoreVector <prsim.query.ScoreVector>`
    """
    u = graph.check_node(u)
    if params.n != graph.n:
        raise PRSimUsageError(
            f"query parameters were sized for n={params.n}, graph has n={graph.n}"
        )
    index.check_compatible(graph, params.c)
    log = QueryLogAdapter(logger, {"source": u})
    log.debug(
        f"d_r={params.d_r} f_r={params.f_r} n_r={params.n_r} "
        f"hubs={len(index)}"
    )
    adj = graph.adjacency

    with Timer() as timer:
        streams = rng.spawn(params.f_r)
        if threads > 1 and params.f_r > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                rounds = list(
                    pool.map(
                        lambda s: _run_round(adj, u, params, index, s), streams
                    )
                )
        else:
            rounds = [_run_round(adj, u, params, index, s) for s in streams]

        stats = QueryStats()
        counts: typing.Dict[typing.Tuple[int, int], int] = {}
        for r in rounds:
            stats.absorb(r.stats)
            for key, count in r.counts.items():
                counts[key] = counts.get(key, 0) + count
        eta_pi = {key: counts[key] / params.n_r for key in sorted(counts)}

        walk_part = _median_over_rounds(rounds)

        index_part: typing.Dict[int, float] = {}
        norm = (1.0 - params.sqrt_c) ** 2
        threshold = params.eta_pi_threshold
        for (w, level), estimate in eta_pi.items():
            if estimate > threshold and index.contains_hub(w):
                stats.index_lists_read += 1
                for v, psi in index.lookup(w, level):
                    index_part[v] = index_part.get(v, 0.0) + estimate * psi / norm

        scores = {}
        for v in sorted(set(walk_part) | set(index_part)):
            total = walk_part.get(v, 0.0) + index_part.get(v, 0.0)
            if total != 0.0:
                scores[v] = total
        scores[u] = 1.0
    stats.micros = timer.micros
    log.info(f"query finished: {stats.summary()}")
    return ScoreVector(
        u,
        scores,
        index_part=index_part,
        walk_part=walk_part,
        eta_pi=eta_pi,
        stats=stats,
    )


def empty_index(graph, c):
    """
    An index with no hubs for ``graph``: every target goes through backward walks.
    """
    return HubIndex(graph.n, graph.m, c, 0.5, 0, {})


def single_source_index_free(graph, u, params, rng, threads=1):
    """
    :func:`single_source` without precomputation.
    """
    return single_source(graph, empty_index(graph, params.c), u, params, rng, threads)


def single_source_batch(graph, index, sources, params, seed, threads=1):
    """
    Run one query per source. Query ``i`` draws from the ``i``-th child of a
    stream seeded with ``seed``; results are returned in input order.
    """
    streams = Rng(seed).spawn(len(sources))
    if threads > 1 and len(sources) > 1:
        # parallelism goes to whole queries, each of which runs its rounds serially
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(
                pool.map(
                    lambda job: single_source(graph, index, job[0], params, job[1]),
                    zip(sources, streams),
                )
            )
    return [single_source(graph, index, u, params, s) for u, s in zip(sources, streams)]
