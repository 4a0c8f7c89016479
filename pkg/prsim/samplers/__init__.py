from prsim.samplers.backward_walk import (
    BwEstimate,
    backward_walk_simple,
    backward_walk_vb,
)
from prsim.samplers.rng import Rng
from prsim.samplers.walks import WalkOutcome, eta_sample, sample_walk, walks_meet

__all__ = (
    "Rng",
    "WalkOutcome",
    "sample_walk",
    "walks_meet",
    "eta_sample",
    "BwEstimate",
    "backward_walk_simple",
    "backward_walk_vb",
)
