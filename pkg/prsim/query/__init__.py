from prsim.query.engine import (
    QueryLogAdapter,
    QueryStats,
    single_source,
    single_source_batch,
    single_source_index_free,
)
from prsim.query.params import QueryParams
from prsim.query.response import ScoreVector

__all__ = (
    "QueryParams",
    "ScoreVector",
    "QueryStats",
    "QueryLogAdapter",
    "single_source",
    "single_source_index_free",
    "single_source_batch",
)
