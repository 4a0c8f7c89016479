import logging
import math
import typing
from dataclasses import dataclass, field

from prsim.exc import ParameterError
from prsim.pagerank import check_decay

logger = logging.getLogger(__name__)


@dataclass
class BackwardSearchResult:
    """
    Per-level reserves and leftover residues of one backward search.

    ``reserves[l]`` maps ``v`` to ``psi_l(v, w)`` and ``residues[l]`` maps ``v``
    to the residue ``r_l(v, w)`` that stayed at or below ``r_max``. Levels are
    contiguous from 0; maps hold nonzero entries only.
    """

    target: int
    r_max: float
    reserves: typing.List[typing.Dict[int, float]] = field(default_factory=list)
    residues: typing.List[typing.Dict[int, float]] = field(default_factory=list)
    pushes: int = 0

    def reserve(self, v, level):
        if level >= len(self.reserves):
            return 0.0
        return self.reserves[level].get(v, 0.0)


def backward_search(graph, w, r_max, c):
    """
    Multi-level local push towards target ``w``.

    Starting from ``r_0(w, w) = 1``, every node ``v`` whose level-``l`` residue
    exceeds ``r_max`` sends ``sqrt(c) * r_l(v, w) / d_in(z)`` to the level-``l+1``
    residue of each out-neighbor ``z``, keeps ``(1 - sqrt(c)) * r_l(v, w)`` as its
    reserve and drops to zero residue. Levels are processed in increasing order,
    nodes within a level in ascending id, until a level has no residue above
    ``r_max``. Reserves under-estimate ``pi_l(v, w)`` by at most ``r_max``.

    :param graph: The graph
    :type graph: :class:`Graph <prsim.graph.Graph>`
    :param w: The target node
    :type w: int
    :param r_max: Residue threshold
    :type r_max: float
    :param c: SimRank decay factor
    :type c: float
    :rtype: :class:`BackwardSearchResult`
    """
    c = check_decay(c)
    if not r_max > 0:
        raise ParameterError("r_max", r_max, "r_max > 0")
    w = graph.check_node(w)
    adj = graph.adjacency
    out_ptr, out_idx, in_deg = adj.out_ptr, adj.out_idx, adj.in_deg
    sqrt_c = math.sqrt(c)
    keep = 1.0 - sqrt_c

    result = BackwardSearchResult(target=w, r_max=r_max)
    frontier = {w: 1.0}
    level = 0
    while frontier:
        reserves = {}
        leftover = {}
        upcoming: typing.Dict[int, float] = {}
        for v in sorted(frontier):
            residue = frontier[v]
            if residue > r_max:
                push = sqrt_c * residue
                for j in range(out_ptr[v], out_ptr[v + 1]):
                    z = out_idx[j]
                    upcoming[z] = upcoming.get(z, 0.0) + push / in_deg[z]
                reserves[v] = keep * residue
                result.pushes += 1
            elif level == 0:
                # the seed settles even when the threshold blocks its push
                reserves[v] = keep * residue
            else:
                leftover[v] = residue
        result.reserves.append(reserves)
        result.residues.append(leftover)
        frontier = upcoming
        level += 1

    logger.debug(
        f"backward search to {w}: {result.pushes} pushes over "
        f"{len(result.reserves)} levels"
    )
    return result
