"""
Ground-truth SimRank.

The dense power method is exact up to ``c^K`` and is limited to graphs below a
configurable node cap. Above the cap, pairwise Monte Carlo over sqrt(c)-walks
gives an unbiased estimate whose precision is set by the number of walk pairs.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from prsim import config
from prsim.exc import OracleCapacityError, ParameterError
from prsim.pagerank import check_decay, transition_matrix, truncation_length
from prsim.query.response import ScoreVector
from prsim.samplers.walks import walk_path

logger = logging.getLogger(__name__)


@dataclass
class ExactSimRank:
    """
    Dense SimRank matrix.

    :ivar n: Number of nodes
    :ivar s: ``s[u, v]``, an ``n x n`` array
    :ivar iterations: Number of power iterations ``K``
    :ivar residual: Elementwise error bound ``c^K``
    """

    n: int
    s: np.ndarray
    iterations: int
    residual: float

    def get(self, u, v):
        return float(self.s[u, v])

    def row(self, u):
        """
        ``{v: s(u, v)}`` over the nonzero entries of row ``u``.
        """
        nz = np.flatnonzero(self.s[u])
        return dict(zip(nz.tolist(), self.s[u, nz].tolist()))

    def as_scores(self, u):
        return ScoreVector(u, self.row(u))


def default_iterations(c):
    return max(1, math.ceil(math.log(1e-12) / math.log(c)))


def exact_simrank(graph, c, K=None, cap=None):
    """
    Iterate ``S <- c * P S P^T`` with the diagonal reset to 1, starting from the
    identity. ``P`` has empty rows for nodes without in-neighbors, so their
    off-diagonal similarities stay 0.

    :param graph: The graph
    :type graph: :class:`Graph <prsim.graph.Graph>`
    :param c: Decay factor
    :type c: float
    :param K: Number of iterations. Defaults to the smallest ``K`` with
        ``c^K <= 1e-12``.
    :type K: int, optional
    :param cap: Largest ``n`` accepted, defaults to the ``exact_cap`` setting
    :type cap: int, optional
    :rtype: :class:`ExactSimRank`
    """
    c = check_decay(c)
    if cap is None:
        cap = config.get_exact_cap()
    if graph.n > cap:
        raise OracleCapacityError(graph.n, cap)
    if K is None:
        K = default_iterations(c)
    if K < 0:
        raise ParameterError("K", K, "K >= 0")

    P = transition_matrix(graph)
    s = np.eye(graph.n)
    for _ in range(K):
        # P S P^T == (P (P S)^T)^T since S stays symmetric
        s = c * np.asarray(P @ np.asarray(P @ s).T).T
        np.fill_diagonal(s, 1.0)
    logger.debug(f"exact SimRank on {graph!r}: {K} iterations")
    return ExactSimRank(n=graph.n, s=s, iterations=K, residual=c**K)


def exact_eta(graph, exact, w, c):
    """
    Last-meeting probability ``eta(w)`` from an exact SimRank matrix: both walks
    survive the first step with probability ``c`` and land on a uniform pair of
    in-neighbors, after which meeting again is exactly SimRank.
    """
    c = check_decay(c)
    neighbors = graph.in_neighbors(w)
    d = len(neighbors)
    if d == 0:
        return 1.0
    block = exact.s[np.ix_(neighbors, neighbors)]
    return 1.0 - c * float(block.sum()) / d**2


def formula_simrank(graph, c, levels=None, exact=None):
    """
    Evaluate the last-meeting decomposition

        s(u, v) = sum_l sum_w pi_l(u, w) pi_l(v, w) eta(w) / (1 - sqrt(c))^2

    with every term taken from an exact oracle. On any graph the result matches
    :func:`exact_simrank` up to the truncation of both computations.

    :param levels: Deepest level of the sum; defaults to the level where the
        remaining walk mass drops below ``1e-10``
    :type levels: int, optional
    :param exact: A precomputed :class:`ExactSimRank` to derive ``eta`` from
    :type exact: :class:`ExactSimRank`, optional
    :rtype: ``numpy.ndarray``
    """
    c = check_decay(c)
    if exact is None:
        exact = exact_simrank(graph, c)
    if levels is None:
        levels = truncation_length(c, 1e-10)
    sqrt_c = math.sqrt(c)
    eta = np.array([exact_eta(graph, exact, w, c) for w in range(graph.n)])

    step = (transition_matrix(graph) * sqrt_c).toarray()
    # hit[u, w] is h_l(u, w), the probability of being at w after l steps
    hit = np.eye(graph.n)
    total = np.zeros((graph.n, graph.n))
    for _ in range(levels + 1):
        total += (hit * eta) @ hit.T
        hit = step @ hit
    return total


def mc_pair_simrank(graph, u, v, c, n_pairs, rng):
    """
    Fraction of ``n_pairs`` independent walk pairs from ``u`` and ``v`` that
    meet. ``1.0`` when ``u == v``.

    :rtype: float
    """
    c = check_decay(c)
    u, v = graph.check_node(u), graph.check_node(v)
    if u == v:
        return 1.0
    if not n_pairs >= 1:
        raise ParameterError("n_pairs", n_pairs, "n_pairs >= 1")
    adj = graph.adjacency
    stop = 1.0 - math.sqrt(c)
    hits = 0
    for _ in range(n_pairs):
        a, _ = walk_path(adj, u, stop, rng)
        b, _ = walk_path(adj, v, stop, rng)
        for i in range(1, min(len(a), len(b))):
            if a[i] == b[i]:
                hits += 1
                break
    return hits / n_pairs


def ground_truth_pair_count(error, confidence, mu_bound=1.0):
    """
    Walk pairs that bring a pairwise Monte Carlo estimate within ``error`` of
    its mean with probability ``confidence``. From the Chernoff bound for
    ``[0, 1]`` variables with mean at most ``mu_bound``,

        n >= (2/3 * error + 2 * mu_bound) / error^2 * ln(2 / (1 - confidence))

    An error of ``1e-5`` at confidence ``0.99999`` needs about ``2.4e11`` pairs.
    """
    if not error > 0:
        raise ParameterError("error", error, "error > 0")
    if not 0 < confidence < 1:
        raise ParameterError("confidence", confidence, "0 < confidence < 1")
    if not 0 < mu_bound <= 1:
        raise ParameterError("mu_bound", mu_bound, "0 < mu_bound <= 1")
    p_f = 1.0 - confidence
    bound = (2.0 / 3.0 * error + 2.0 * mu_bound) / error**2 * math.log(2.0 / p_f)
    return math.ceil(bound)


def mc_single_source(graph, u, c, eps, delta, rng):
    """
    Monte Carlo baseline: pairwise estimates against every other node, each
    sized so that all ``n - 1`` of them are within ``eps`` with probability
    ``1 - delta``.

    :rtype: :class:`ScoreVector <prsim.query.ScoreVector>`
    """
    u = graph.check_node(u)
    if not 0 < delta < 1:
        raise ParameterError("delta", delta, "0 < delta < 1")
    n_pairs = ground_truth_pair_count(eps, 1.0 - delta / graph.n)
    logger.debug(f"Monte Carlo baseline for {u}: {n_pairs} pairs per node")
    scores = {}
    for v in range(graph.n):
        if v == u:
            continue
        estimate = mc_pair_simrank(graph, u, v, c, n_pairs, rng)
        if estimate:
            scores[v] = estimate
    scores[u] = 1.0
    return ScoreVector(u, scores)
