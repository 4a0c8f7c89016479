import logging
import math
import typing
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from prsim.exc import IndexMismatchError, ParameterError, PRSimUsageError
from prsim.index.backward_search import backward_search
from prsim.pagerank import check_decay, top_k_by_pagerank
from prsim.utils import Timer

logger = logging.getLogger(__name__)

HubLists = typing.Dict[int, typing.List[typing.Tuple[int, float]]]


def residue_threshold(c, eps):
    """
    ``r_max = (1 - sqrt(c))^2 * eps / 12``, i.e. ``eps / c1``.
    """
    return (1.0 - math.sqrt(c)) ** 2 * eps / 12.0


class HubIndex:
    """
    Precomputed l-hop reverse PPR towards the hub nodes.

    For every hub ``w`` and level ``l`` the index keeps the list ``L_l(w)`` of
    ``(v, psi_l(v, w))`` tuples with ``psi_l(v, w) > r_max``, ascending by ``v``.
    Hubs are kept in the order they were ranked (descending reverse PageRank).

    A ``HubIndex`` is immutable once built and may be shared between threads.

    :param n: Node count of the indexed graph
    :param m: Edge count of the indexed graph
    :param c: Decay factor the index was built with
    :param eps: Error parameter the index was built with
    :param j0: Number of hubs requested
    :param hubs: ``{w: {level: [(v, psi), ...]}}``
    """

    def __init__(self, n, m, c, eps, j0, hubs, r_max=None):
        self.n = int(n)
        self.m = int(m)
        self.c = float(c)
        self.eps = float(eps)
        self.j0 = int(j0)
        self.r_max = float(residue_threshold(c, eps) if r_max is None else r_max)
        self._hubs: typing.Dict[int, HubLists] = hubs
        self.build_micros = 0

    def __repr__(self):
        return (
            f"{self.__class__.__name__}(hubs={len(self._hubs)}, "
            f"tuples={self.size()}, c={self.c}, eps={self.eps})"
        )

    def __len__(self):
        return len(self._hubs)

    def __contains__(self, w):
        return w in self._hubs

    def contains_hub(self, w):
        return w in self._hubs

    @property
    def hubs(self):
        """
        Hub nodes in rank order.
        """
        return list(self._hubs)

    def levels(self, w):
        """
        ``{level: tuples}`` for hub ``w``; empty for non-hubs.
        """
        return self._hubs.get(w, {})

    def lookup(self, w, level):
        """
        The list ``L_level(w)``. Empty for non-hubs and for levels without stored
        tuples.
        """
        return self._hubs.get(w, {}).get(level, [])

    def size(self):
        """
        Total number of stored tuples.
        """
        return sum(
            len(tuples) for levels in self._hubs.values() for tuples in levels.values()
        )

    def stats(self):
        per_hub = {
            w: sum(len(t) for t in levels.values()) for w, levels in self._hubs.items()
        }
        deepest = max(
            (max(levels) for levels in self._hubs.values() if levels), default=-1
        )
        return {
            "hub_count": len(self._hubs),
            "tuples": sum(per_hub.values()),
            "deepest_level": deepest,
            "r_max": self.r_max,
            "per_hub": per_hub,
        }

    def check_compatible(self, graph, c=None):
        """
        Raise :class:`IndexMismatchError <prsim.exc.IndexMismatchError>` unless
        this index was built on a graph with the same shape as ``graph`` and, when
        given, the same decay factor.
        """
        if self.n != graph.n:
            raise IndexMismatchError("n", self.n, graph.n)
        if self.m != graph.m:
            raise IndexMismatchError("m", self.m, graph.m)
        if c is not None and self.c != c:
            raise IndexMismatchError("c", self.c, c)


def lookup(index, w, level):
    return index.lookup(w, level)


def _hub_lists(graph, w, r_max, c):
    result = backward_search(graph, w, r_max, c)
    lists: HubLists = {}
    for level, reserves in enumerate(result.reserves):
        kept = sorted((v, psi) for v, psi in reserves.items() if psi > r_max)
        if kept:
            lists[level] = kept
    return lists


def build_index(graph, pr, c, eps, j0, threads=1):
    """
    Run a backward search from each of the ``j0`` nodes with the largest reverse
    PageRank and keep the reserves above ``r_max``.

    :param graph: The graph
    :type graph: :class:`Graph <prsim.graph.Graph>`
    :param pr: Reverse PageRank of ``graph``
    :type pr: :class:`PageRankVector <prsim.pagerank.PageRankVector>`
    :param c: Decay factor
    :type c: float
    :param eps: Error parameter; sets ``r_max``
    :type eps: float
    :param j0: Number of hubs. ``0`` yields an empty index.
    :type j0: int
    :param threads: Worker threads; hubs are independent and results are merged
        in hub rank order, so the index does not depend on this value
    :type threads: int
    :rtype: :class:`HubIndex`
    """
    c = check_decay(c)
    if not eps > 0:
        raise ParameterError("eps", eps, "eps > 0")
    if not 0 <= j0 <= graph.n:
        raise ParameterError("j0", j0, f"0 <= j0 <= n={graph.n}")
    r_max = residue_threshold(c, eps)
    hub_nodes = top_k_by_pagerank(pr, j0)
    logger.info(f"Building index over {j0} hubs, r_max={r_max:.3e}")

    # materialize shared adjacency before fanning out
    graph.adjacency
    with Timer() as timer:
        if threads > 1 and len(hub_nodes) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                built = list(
                    pool.map(lambda w: _hub_lists(graph, w, r_max, c), hub_nodes)
                )
        else:
            built = [_hub_lists(graph, w, r_max, c) for w in hub_nodes]

    index = HubIndex(graph.n, graph.m, c, eps, j0, dict(zip(hub_nodes, built)))
    index.build_micros = timer.micros
    logger.info(f"Built {index!r} in {timer.micros} us")
    return index


def choose_hub_count(mode, graph, pr, eps, gamma=None):
    """
    Resolve a hub-count setting to an integer ``j0``.

    :param mode: An integer, or one of ``"sqrt"`` (``ceil(sqrt(n))``), ``"auto-m"``
        (``n * (eps * avg_degree)^(gamma / (gamma - 1))``, needs ``gamma > 1``) or
        ``"budget"`` (the largest ``j0`` keeping ``(n / eps) * sum_j pi(w_j)``
        within ``m``)
    :type mode: int or str
    :param gamma: Power-law exponent, for ``"auto-m"``
    :type gamma: float, optional
    """
    n = graph.n
    if isinstance(mode, int) or (isinstance(mode, str) and mode.isdigit()):
        j0 = int(mode)
        if not 0 <= j0 <= n:
            raise ParameterError("hubs", j0, f"0 <= hubs <= n={n}")
        return j0
    if mode == "sqrt":
        return min(n, math.ceil(math.sqrt(n)))
    if mode == "auto-m":
        if gamma is None or not gamma > 1:
            raise ParameterError("gamma", gamma, "gamma > 1 for hubs=auto-m")
        avg_degree = graph.m / n
        j0 = n * (eps * avg_degree) ** (gamma / (gamma - 1.0))
        return int(min(n, max(0, math.floor(j0))))
    if mode == "budget":
        ranked = np.sort(pr.pi)[::-1]
        spend = np.cumsum(ranked) * (n / eps)
        return int(np.searchsorted(spend, graph.m, side="right"))
    raise PRSimUsageError(
        f"hub count must be an integer, 'sqrt', 'auto-m' or 'budget', got {mode!r}"
    )
