import csv
import logging
import statistics
import typing
from dataclasses import astuple, dataclass, field, fields

from prsim.exc import ParameterError, PRSimUsageError

logger = logging.getLogger(__name__)


def _rank(nodes, score):
    return sorted(nodes, key=lambda v: (-score(v), v))


def build_pool(score_lists, k):
    """
    Union of the top-``k`` nodes of every result, source excluded.

    :param score_lists: Results of the algorithms being compared
    :type score_lists: list of :class:`ScoreVector <prsim.query.ScoreVector>`
    :param k: Number of nodes each result contributes
    :type k: int
    :rtype: set of int
    """
    if not k >= 1:
        raise ParameterError("k", k, "k >= 1")
    if not score_lists:
        raise PRSimUsageError("pooling needs at least one result")
    pool = set()
    for scores in score_lists:
        pool.update(scores.top_k(k))
    return pool


def top_by(scores, pool, k):
    """
    The ``k`` pool nodes with the highest ``scores``, ties by ascending id.
    ``scores`` is anything with a ``get(v, default)`` method; missing nodes
    score 0.
    """
    return _rank(pool, lambda v: scores.get(v, 0.0))[:k]


def avg_error_at_k(truth, est, top):
    """
    ``(1/k) * sum_i |est(v_i) - truth(v_i)|`` over the nodes in ``top``.
    Missing entries of either side count as 0.
    """
    if not top:
        raise ParameterError("k", 0, "k >= 1")
    return sum(abs(est.get(v, 0.0) - truth.get(v, 0.0)) for v in top) / len(top)


def precision_at_k(truth_top, est_top):
    """
    Fraction of the estimated top-``k`` that is in the true top-``k``.
    """
    truth_top, est_top = set(truth_top), set(est_top)
    if len(truth_top) != len(est_top):
        raise PRSimUsageError(
            f"top-k sets differ in size: {len(truth_top)} != {len(est_top)}"
        )
    if not truth_top:
        raise ParameterError("k", 0, "k >= 1")
    return len(truth_top & est_top) / len(truth_top)


@dataclass
class EvalRow:
    source: int
    k: int
    avg_error: float
    precision: float
    micros: int
    samples: int
    vb_walks: int


@dataclass
class EvalReport:
    """
    One :class:`EvalRow` per evaluated query.
    """

    rows: typing.List[EvalRow] = field(default_factory=list)

    HEADER = tuple(f.name for f in fields(EvalRow))

    def __len__(self):
        return len(self.rows)

    def add(self, row):
        if row.avg_error < 0 or not 0 <= row.precision <= 1:
            raise PRSimUsageError(f"metric out of range in {row!r}")
        self.rows.append(row)

    def means(self):
        """
        Column means over all rows, keyed by column name. Empty for an empty
        report.
        """
        if not self.rows:
            return {}
        return {
            name: statistics.fmean(getattr(r, name) for r in self.rows)
            for name in self.HEADER
            if name != "source"
        }

    def write_csv(self, f):
        """
        Write the rows and a final ``mean`` row to the text stream ``f``.
        """
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(self.HEADER)
        for row in self.rows:
            writer.writerow(astuple(row))
        means = self.means()
        if means:
            writer.writerow(["mean"] + [repr(means[name]) for name in self.HEADER[1:]])
