import logging
import math
from dataclasses import dataclass

from prsim import config
from prsim.exc import ParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QueryParams:
    """
    Parameters of a single-source query and the sample counts they imply.

    :param n: Node count of the queried graph; enters the number of rounds
    :type n: int
    :param c: SimRank decay factor [default: ``0.6``]
    :type c: float
    :param eps: Additive error ``epsilon`` [default: ``0.1``]
    :type eps: float
    :param delta: Failure probability [default: ``0.0001``]
    :type delta: float
    :param sample_scale: Multiplier on the samples per round. The constants behind
        ``d_r`` are conservative; values below 1 trade the guarantee for speed.
        [default: ``1.0``]
    :type sample_scale: float
    """

    n: int
    c: float = 0.6
    eps: float = 0.1
    delta: float = 0.0001
    sample_scale: float = 1.0

    def __post_init__(self):
        if not self.n >= 1:
            raise ParameterError("n", self.n, "n >= 1")
        if not 0 < self.c < 1:
            raise ParameterError("c", self.c, "0 < c < 1")
        if not 0 < self.eps < 1:
            raise ParameterError("eps", self.eps, "0 < eps < 1")
        if not 0 < self.delta < 1:
            raise ParameterError("delta", self.delta, "0 < delta < 1")
        if not self.sample_scale > 0:
            raise ParameterError("sample_scale", self.sample_scale, "sample_scale > 0")

    @classmethod
    def from_config(cls, n, profile=None, **overrides):
        """
        Fill unspecified fields from :mod:`prsim.config`. ``None`` overrides
        count as unspecified.
        """
        values = {
            "c": config.get_decay(profile),
            "eps": config.get_eps(profile),
            "delta": config.get_delta(profile),
            "sample_scale": config.get_sample_scale(profile),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(n=n, **values)

    @property
    def sqrt_c(self):
        return math.sqrt(self.c)

    @property
    def c1(self):
        """
        ``12 / (1 - sqrt(c))^2``
        """
        return 12.0 / (1.0 - self.sqrt_c) ** 2

    @property
    def d_r(self):
        """
        Samples per round, ``ceil(c1 / eps^2)`` scaled by ``sample_scale``.
        """
        return max(1, math.ceil(self.sample_scale * self.c1 / self.eps**2))

    @property
    def f_r(self):
        """
        Rounds for the median, ``ceil(3 ln(n / delta))``.
        """
        return max(1, math.ceil(3.0 * math.log(self.n / self.delta)))

    @property
    def n_r(self):
        return self.d_r * self.f_r

    @property
    def eta_pi_threshold(self):
        """
        ``eps / c1``: the estimated ``eta * pi_l`` a hub level needs before its
        index list is read.
        """
        return self.eps / self.c1
