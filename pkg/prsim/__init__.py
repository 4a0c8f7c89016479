import logging

from prsim.evaluation import (
    EvalReport,
    ExactSimRank,
    evaluate_queries,
    exact_eta,
    exact_simrank,
    mc_pair_simrank,
)
from prsim.exc import (
    ConfigError,
    FileAccessError,
    GraphFormatError,
    IndexFileError,
    IndexMismatchError,
    NodeOutOfRangeError,
    OracleCapacityError,
    ParameterError,
    PRSimError,
    PRSimUsageError,
)
from prsim.graph import Graph, load_edge_list, write_edge_list
from prsim.graphgen import GenSpec, generate
from prsim.index import HubIndex, build_index, deserialize, serialize
from prsim.pagerank import PageRankVector, exact_lhop_rppr, reverse_pagerank
from prsim.query import (
    QueryParams,
    ScoreVector,
    single_source,
    single_source_batch,
    single_source_index_free,
)
from prsim.samplers import Rng
from prsim.version import __version__

__all__ = (
    "__version__",
    "PRSimError",
    "PRSimUsageError",
    "ParameterError",
    "NodeOutOfRangeError",
    "IndexMismatchError",
    "OracleCapacityError",
    "ConfigError",
    "GraphFormatError",
    "IndexFileError",
    "FileAccessError",
    "Graph",
    "load_edge_list",
    "write_edge_list",
    "PageRankVector",
    "reverse_pagerank",
    "exact_lhop_rppr",
    "HubIndex",
    "build_index",
    "serialize",
    "deserialize",
    "Rng",
    "QueryParams",
    "ScoreVector",
    "single_source",
    "single_source_index_free",
    "single_source_batch",
    "ExactSimRank",
    "exact_simrank",
    "exact_eta",
    "mc_pair_simrank",
    "EvalReport",
    "evaluate_queries",
    "GenSpec",
    "generate",
)


# the CLI installs its own handler; library users configure logging themselves
logging.getLogger("prsim").addHandler(logging.NullHandler())
