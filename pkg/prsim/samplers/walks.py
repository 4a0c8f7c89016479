"""
Reverse sqrt(c)-walks.

At every position the walk first flips its stop coin: with probability
``1 - sqrt(c)`` it terminates there. Otherwise it moves to a uniformly chosen
in-neighbor, or evaporates when the current node has none. An evaporated walk
has no terminal node.
"""
import math
import typing
from dataclasses import dataclass

from prsim.pagerank import check_decay


@dataclass(frozen=True)
class WalkOutcome:
    """
    :ivar positions: ``v_0, ..., v_k`` with ``v_0`` the source and ``v_{i+1}`` an
        in-neighbor of ``v_i``
    :ivar terminal: The node the walk stopped at, or None if it evaporated
    """

    positions: typing.Tuple[int, ...]
    terminal: typing.Optional[int]

    @property
    def steps(self):
        """
        Number of moves, or None for an evaporated walk.
        """
        if self.terminal is None:
            return None
        return len(self.positions) - 1

    def as_dict(self):
        return {
            "positions": list(self.positions),
            "terminal": self.terminal,
            "steps": self.steps,
        }


def walk_path(adj, u, stop, rng):
    """
    Sample one walk over an :class:`AdjacencyView`. Returns the positions and
    whether the walk terminated (rather than evaporated).
    """
    in_ptr, in_idx = adj.in_ptr, adj.in_idx
    positions = [u]
    x = u
    while True:
        if rng.random() < stop:
            return positions, True
        start = in_ptr[x]
        d = in_ptr[x + 1] - start
        if d == 0:
            return positions, False
        x = in_idx[start + rng.below(d)]
        positions.append(x)


def _meet(a, b, from_step):
    for i in range(from_step, min(len(a), len(b))):
        if a[i] == b[i]:
            return True
    return False


def sample_walk(graph, u, c, rng):
    """
    Sample a sqrt(c)-walk from ``u``.

    :rtype: :class:`WalkOutcome`
    """
    stop = 1.0 - math.sqrt(check_decay(c))
    positions, terminated = walk_path(graph.adjacency, graph.check_node(u), stop, rng)
    return WalkOutcome(tuple(positions), positions[-1] if terminated else None)


def walks_meet(a, b, from_step):
    """
    True iff both walks occupy the same node at some step ``i >= from_step``.

    :param a: First walk
    :type a: :class:`WalkOutcome`
    :param b: Second walk
    :type b: :class:`WalkOutcome`
    :param from_step: ``0`` or ``1``
    :type from_step: int
    """
    return _meet(a.positions, b.positions, from_step)


def eta_trial(adj, w, stop, rng):
    first, _ = walk_path(adj, w, stop, rng)
    second, _ = walk_path(adj, w, stop, rng)
    return not _meet(first, second, 1)


def eta_sample(graph, w, c, rng):
    """
    Draw two independent walks from ``w`` and report whether they never share
    a node at any step ``i >= 1``. The success probability is the last-meeting
    probability ``eta(w)``.
    """
    stop = 1.0 - math.sqrt(check_decay(c))
    return eta_trial(graph.adjacency, graph.check_node(w), stop, rng)
