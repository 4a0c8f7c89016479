"""
Exact reverse PageRank and exact l-hop reverse personalized PageRank.

A sqrt(c)-walk from ``u`` stops at its current node with probability
``1 - sqrt(c)``; otherwise it moves to a uniformly chosen in-neighbor. When the
walk tries to move from a node without in-neighbors it evaporates: it ends
without a terminal node. Every probability computed here is therefore
sub-stochastic on graphs with such nodes.

Both computations apply the same operator. ``P[y, x] = 1 / d_in(y)`` for every
in-neighbor ``x`` of ``y`` is the one-step transition matrix of the reverse
walk; the l-hop RPPR to a fixed target is swept with ``sqrt(c) * P`` and the
reverse PageRank with its transpose.
"""
import logging
import math
import typing
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from prsim.exc import ParameterError

logger = logging.getLogger(__name__)


def check_decay(c):
    if not 0 < c < 1:
        raise ParameterError("c", c, "0 < c < 1")
    return float(c)


def transition_matrix(graph):
    """
    The reverse-walk transition matrix ``P`` of ``graph`` as a CSR matrix.
    Rows of nodes without in-neighbors are empty.
    """
    in_deg = graph.in_deg
    weights = np.repeat(
        np.divide(1.0, in_deg, out=np.zeros(graph.n), where=in_deg > 0), in_deg
    )
    return sp.csr_matrix(
        (weights, graph.in_indices, graph.in_indptr), shape=(graph.n, graph.n)
    )


@dataclass
class RpprVector:
    """
    ``levels[l]`` maps source nodes ``u`` to ``pi_l(u, target)``, the probability
    that a sqrt(c)-walk from ``u`` terminates at ``target`` after exactly ``l``
    steps. Only nonzero entries are stored.
    """

    target: int
    c: float
    levels: typing.List[typing.Dict[int, float]] = field(default_factory=list)

    def get(self, u, level):
        if level >= len(self.levels):
            return 0.0
        return self.levels[level].get(u, 0.0)

    def total(self):
        """
        ``sum_l sum_u pi_l(u, target)``, which equals ``n * pi(target)`` on graphs
        where every node has an in-neighbor.
        """
        return math.fsum(v for level in self.levels for v in level.values())

    def hitting(self, u, level):
        """
        ``h_l(u, target)``: probability of being at the target after ``l`` steps.
        """
        return self.get(u, level) / (1.0 - math.sqrt(self.c))


def _sparse_level(vec):
    nz = np.flatnonzero(vec)
    return dict(zip(nz.tolist(), vec[nz].tolist()))


def exact_lhop_rppr(graph, w, max_level, c):
    """
    Compute ``pi_l(., w)`` for ``l = 0..max_level`` by the dense recurrence
    ``pi_{l+1}(y, w) = sum_{x in I(y)} sqrt(c) / d_in(y) * pi_l(x, w)``.

    :param graph: The graph
    :type graph: :class:`Graph <prsim.graph.Graph>`
    :param w: The target node
    :type w: int
    :param max_level: Deepest level to compute
    :type max_level: int
    :param c: SimRank decay factor
    :type c: float
    :rtype: :class:`RpprVector`
    """
    c = check_decay(c)
    w = graph.check_node(w)
    if max_level < 0:
        raise ParameterError("max_level", max_level, "max_level >= 0")
    sqrt_c = math.sqrt(c)
    step = transition_matrix(graph) * sqrt_c

    current = np.zeros(graph.n)
    current[w] = 1.0 - sqrt_c
    levels = [_sparse_level(current)]
    for _ in range(max_level):
        current = step @ current
        levels.append(_sparse_level(current))
    return RpprVector(target=w, c=c, levels=levels)


def exact_hitting_probabilities(graph, w, max_level, c):
    """
    ``h_l(u, w) = pi_l(u, w) / (1 - sqrt(c))`` as a list of dense arrays, one
    per level.
    """
    rppr = exact_lhop_rppr(graph, w, max_level, c)
    scale = 1.0 / (1.0 - math.sqrt(c))
    out = []
    for level in rppr.levels:
        dense = np.zeros(graph.n)
        for u, value in level.items():
            dense[u] = value * scale
        out.append(dense)
    return out


@dataclass
class PageRankVector:
    """
    Reverse PageRank ``pi(w)``: the probability that a sqrt(c)-walk from a
    uniformly random node terminates at ``w``.
    """

    pi: np.ndarray
    tol: float
    iterations: int

    def __len__(self):
        return len(self.pi)

    def __getitem__(self, w):
        return float(self.pi[w])


def truncation_length(c, tol):
    """
    Number of power iterations after which the remaining walk mass
    ``sqrt(c)^L`` drops below ``tol``.
    """
    return max(1, math.ceil(math.log(tol) / math.log(math.sqrt(c))))


def reverse_pagerank(graph, c, tol=1e-9):
    """
    Deterministic power iteration for the reverse PageRank of every node.

    Starting from the uniform distribution ``q_0``, each step moves the walk
    mass one hop backwards, ``q_{i+1} = sqrt(c) * P^T q_i``, and
    ``pi = (1 - sqrt(c)) * sum_i q_i``.

    :param c: SimRank decay factor
    :type c: float
    :param tol: Bound on the total mass discarded by truncation
    :type tol: float
    :rtype: :class:`PageRankVector`
    """
    c = check_decay(c)
    if not tol > 0:
        raise ParameterError("tol", tol, "tol > 0")
    sqrt_c = math.sqrt(c)
    iterations = truncation_length(c, tol)
    step = (transition_matrix(graph).T * sqrt_c).tocsr()

    q = np.full(graph.n, 1.0 / graph.n)
    acc = q.copy()
    for _ in range(iterations):
        q = step @ q
        acc += q
    pi = (1.0 - sqrt_c) * acc
    logger.info(
        f"reverse PageRank on {graph!r}: {iterations} iterations, "
        f"retained mass {pi.sum():.6f}"
    )
    return PageRankVector(pi=pi, tol=tol, iterations=iterations)


def top_k_by_pagerank(pr, k):
    """
    The ``k`` nodes with the largest reverse PageRank, ties broken by ascending
    node id.
    """
    n = len(pr.pi)
    if not 0 <= k <= n:
        raise ParameterError("k", k, f"0 <= k <= n={n}")
    order = np.lexsort((np.arange(n), -pr.pi))
    return order[:k].tolist()


def write_pagerank_tsv(graph, pr, f):
    """
    Write ``node<TAB>pi`` lines to the text stream ``f``, descending by ``pi``.
    Nodes are written with their original ids.
    """
    for v in top_k_by_pagerank(pr, len(pr.pi)):
        f.write(f"{graph.original_id(v)}\t{float(pr.pi[v])!r}\n")
