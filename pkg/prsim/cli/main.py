import argparse
import logging
import sys

from prsim.cli import commands
from prsim.exc import ParameterError, PRSimError
from prsim.graphgen import KINDS
from prsim.version import __version__

logger = logging.getLogger(__name__)

_VERBOSITY = (logging.WARNING, logging.INFO, logging.DEBUG)

# installed by the most recent run(); replaced on every call
_handler = None


def _common_options():
    """
    Options accepted both before and after the subcommand name. Defaults are
    suppressed so a flag given after the subcommand does not get overwritten
    by the absent one before it, and unset flags fall back to config.
    """
    common = argparse.ArgumentParser(add_help=False)
    group = common.add_argument_group("global options")
    group.add_argument(
        "--c", type=float, default=argparse.SUPPRESS, help="SimRank decay factor"
    )
    group.add_argument(
        "--eps", type=float, default=argparse.SUPPRESS, help="additive error"
    )
    group.add_argument(
        "--delta", type=float, default=argparse.SUPPRESS, help="failure probability"
    )
    group.add_argument(
        "--seed",
        type=int,
        default=argparse.SUPPRESS,
        help="random seed; falls back to PRSIM_SEED, then the config",
    )
    group.add_argument(
        "--threads", type=int, default=argparse.SUPPRESS, help="worker threads"
    )
    group.add_argument(
        "--sample-scale",
        dest="sample_scale",
        type=float,
        default=argparse.SUPPRESS,
        help="multiplier on the samples per query round",
    )
    group.add_argument(
        "--profile",
        default=argparse.SUPPRESS,
        help="config profile; falls back to PRSIM_PROFILE, then 'default'",
    )
    group.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=argparse.SUPPRESS,
        help="log to stderr; repeat for debug output",
    )
    return common


def _add_graph(p):
    p.add_argument("--graph", required=True, help="edge list to load")
    p.add_argument(
        "--undirected",
        action="store_true",
        help="read every line as an edge in both directions",
    )
    p.add_argument(
        "--keep-duplicates",
        dest="dedupe",
        action="store_false",
        default=None,
        help="keep repeated edges instead of collapsing them; overrides config",
    )


def _add_index_source(p):
    p.add_argument("--index", help="index file; built in memory when omitted")
    _add_hubs(p)


def _add_hubs(p):
    p.add_argument(
        "--hubs",
        default="sqrt",
        help="hub count: an integer, 'sqrt', 'auto-m' or 'budget' [default: sqrt]",
    )
    p.add_argument("--gamma", type=float, help="power-law exponent, for auto-m")


def _add_sweep_options(p):
    _add_hubs(p)
    p.add_argument("--queries", type=int, default=100, help="queries per graph")
    p.add_argument("--repeats", type=int, default=1, help="graphs per setting")
    p.add_argument("-o", "--output", help="CSV file; stdout when omitted")


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="prsim",
        description="Single-source SimRank with a reverse PageRank hub index.",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("gen", parents=[common], help="generate a synthetic graph")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--n", type=int, required=True, help="number of nodes")
    p.add_argument("--gamma", type=float, help="power-law exponent")
    p.add_argument("--davg", type=float, help="average degree")
    p.add_argument("--p", type=float, help="edge probability (er)")
    p.add_argument("-o", "--output", required=True, help="edge list to write")
    p.add_argument("--id-map", dest="id_map", help="also write the id sidecar")
    p.set_defaults(func=commands.gen)

    p = sub.add_parser("pagerank", parents=[common], help="reverse PageRank TSV")
    _add_graph(p)
    p.add_argument("-o", "--output", help="TSV file; stdout when omitted")
    p.set_defaults(func=commands.pagerank)

    p = sub.add_parser("build-index", parents=[common], help="build a hub index")
    _add_graph(p)
    _add_hubs(p)
    p.add_argument("-o", "--output", required=True, help="index file to write")
    p.set_defaults(func=commands.build_index_cmd)

    p = sub.add_parser("index-stats", parents=[common], help="describe an index")
    p.add_argument("--index", required=True)
    p.add_argument("--per-hub", dest="per_hub", action="store_true")
    p.set_defaults(func=commands.index_stats)

    p = sub.add_parser("query", parents=[common], help="single-source query")
    _add_graph(p)
    p.add_argument("--source", type=int, required=True, help="original node id")
    _add_index_source(p)
    p.add_argument("--top", type=int, help="print only the best rows")
    p.add_argument("-o", "--output", help="TSV file; stdout when omitted")
    p.set_defaults(func=commands.query)

    p = sub.add_parser("eval", parents=[common], help="AvgError@k and Precision@k")
    _add_graph(p)
    _add_index_source(p)
    p.add_argument("--k", type=int, default=50)
    p.add_argument("--queries", type=int, default=10, help="random sources")
    p.add_argument("--sources", help="comma separated original ids")
    p.add_argument(
        "--gt-pairs",
        dest="gt_pairs",
        type=int,
        help="walk pairs per pool node when the graph is above the exact cap",
    )
    p.add_argument(
        "--no-baseline",
        dest="no_baseline",
        action="store_true",
        help="pool only the PRSim results",
    )
    p.add_argument("-o", "--output", help="CSV file; stdout when omitted")
    p.set_defaults(func=commands.evaluate)

    p = sub.add_parser("sweep-gamma", parents=[common], help="time against gamma")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--davg", type=float, default=10.0)
    p.add_argument("--gammas", required=True, help="comma separated exponents")
    _add_sweep_options(p)
    p.set_defaults(func=commands.sweep_gamma_cmd)

    p = sub.add_parser("sweep-scale", parents=[common], help="time against n")
    p.add_argument("--ns", required=True, help="comma separated node counts")
    p.add_argument("--davg", type=float, default=10.0)
    _add_sweep_options(p)
    p.set_defaults(func=commands.sweep_scale_cmd, gamma=3.0)

    p = sub.add_parser("sweep-degree", parents=[common], help="time against degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degrees", required=True, help="comma separated degrees")
    _add_sweep_options(p)
    p.set_defaults(func=commands.sweep_degree_cmd)

    p = sub.add_parser("sample", parents=[common], help="raw sampler output")
    _add_graph(p)
    p.add_argument(
        "--what", choices=("walk", "eta", "bw-simple", "bw-vb"), default="walk"
    )
    p.add_argument("--node", type=int, required=True, help="original node id")
    p.add_argument("--level", type=int, default=1, help="level, for bw-*")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("-o", "--output", help="JSON lines file; stdout when omitted")
    p.set_defaults(func=commands.sample)

    return parser


def _configure_logging(verbosity):
    global _handler
    root = logging.getLogger("prsim")
    if _handler is not None:
        root.removeHandler(_handler)
    _handler = logging.StreamHandler(sys.stderr)
    _handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root.addHandler(_handler)
    root.setLevel(_VERBOSITY[min(verbosity, len(_VERBOSITY) - 1)])


def _describe(error):
    if isinstance(error, ParameterError):
        return f"{error.name}={error.value!r} violates invariant {error.invariant}"
    return str(error)


def run(argv=None):
    """
    Parse ``argv`` and run the selected subcommand.

    :returns: The process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    _configure_logging(getattr(args, "verbose", 0) or 0)
    logger.debug(f"running {args.command} with {vars(args)}")
    try:
        return args.func(args)
    except PRSimError as e:
        logger.debug("command failed", exc_info=True)
        print(f"prsim: error: {_describe(e)}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())
