from prsim.index.backward_search import BackwardSearchResult, backward_search
from prsim.index.hub_index import (
    HubIndex,
    build_index,
    choose_hub_count,
    lookup,
    residue_threshold,
)
from prsim.index.serialization import deserialize, dumps, loads, serialize

__all__ = (
    "BackwardSearchResult",
    "backward_search",
    "HubIndex",
    "build_index",
    "choose_hub_count",
    "lookup",
    "residue_threshold",
    "serialize",
    "deserialize",
    "dumps",
    "loads",
)
