import logging

logger = logging.getLogger(__name__)


class ScoreVector:
    """
    Result of a single-source query: a sparse map from node to estimated
    SimRank ``s(source, v)``.

    The ``ScoreVector`` supports direct item access as an alias for the
    underlying ``scores``. Absent nodes read as ``0.0``, which is what the
    estimator reports for them.

    >>> print(result[7])  # alias for result.scores.get(7, 0.0)

    :ivar source: The query node
    :ivar scores: ``{v: score}`` for every node with a nonzero estimate
    :ivar index_part: ``{v: score}`` contributed through hub index lists, or None
    :ivar walk_part: ``{v: score}`` contributed by backward walks, or None
    :ivar eta_pi: ``{(w, level): estimate}`` of ``eta(w) * pi_level(source, w)``,
        or None for results that do not come from the PRSim estimator
    :ivar stats: Sampling counters and timing, or None
    """

    def __init__(
        self, source, scores, index_part=None, walk_part=None, eta_pi=None, stats=None
    ):
        self.source = source
        self.scores = scores
        self.index_part = index_part
        self.walk_part = walk_part
        self.eta_pi = eta_pi
        self.stats = stats

    def __str__(self):
        return repr(self)

    def __repr__(self):
        return f"{self.__class__.__name__}(source={self.source}, nonzero={len(self)})"

    def __getitem__(self, v):
        return self.scores.get(v, 0.0)

    def __contains__(self, v):
        """
        ``v in result`` is true for nodes with a nonzero estimate
        """
        return v in self.scores

    def __len__(self):
        return len(self.scores)

    def __iter__(self):
        return iter(self.scores)

    @property
    def data(self):
        """
        The scores as a plain dict.
        """
        return self.scores

    def get(self, v, default=0.0):
        return self.scores.get(v, default)

    def items(self):
        return self.scores.items()

    def ranked(self, include_source=False):
        """
        ``(v, score)`` pairs by descending score, ties by ascending node id.
        """
        pairs = (
            (v, s)
            for v, s in self.scores.items()
            if include_source or v != self.source
        )
        return sorted(pairs, key=lambda pair: (-pair[1], pair[0]))

    def top_k(self, k, include_source=False):
        """
        The ``k`` best nodes in :meth:`ranked` order. Fewer are returned when the
        vector has fewer nonzero entries.
        """
        return [v for v, _ in self.ranked(include_source=include_source)[:k]]
