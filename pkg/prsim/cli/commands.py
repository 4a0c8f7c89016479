"""
Handlers for the ``prsim`` subcommands.

Each handler receives the parsed arguments, wires library calls together and
formats their results. Tables go to standard output (or ``--output``), run
summaries go to standard error.
"""
import contextlib
import json
import logging
import sys

from prsim import config
from prsim.exc import convert_os_error
from prsim.evaluation import (
    SweepSettings,
    evaluate_queries,
    random_sources,
    sweep_degree,
    sweep_gamma,
    sweep_scale,
    write_sweep_csv,
)
from prsim.graph import load_edge_list, write_edge_list, write_id_map
from prsim.graphgen import GenSpec, generate
from prsim.index import build_index, choose_hub_count, deserialize, serialize
from prsim.pagerank import reverse_pagerank, write_pagerank_tsv
from prsim.query import QueryParams, single_source
from prsim.samplers import (
    Rng,
    backward_walk_simple,
    backward_walk_vb,
    eta_sample,
    sample_walk,
)
from prsim.utils import sha256_file

logger = logging.getLogger(__name__)


class Settings:
    """
    Global options with config fallbacks applied. Flags given on the command
    line win over the active profile, which wins over built-in defaults.
    """

    def __init__(self, args):
        profile = getattr(args, "profile", None)
        self.profile = profile
        self.c = _pick(args, "c", config.get_decay, profile)
        self.eps = _pick(args, "eps", config.get_eps, profile)
        self.delta = _pick(args, "delta", config.get_delta, profile)
        self.seed = _pick(args, "seed", config.get_seed, profile)
        self.threads = _pick(args, "threads", config.get_threads, profile)
        self.sample_scale = _pick(
            args, "sample_scale", config.get_sample_scale, profile
        )

    def query_params(self, n):
        return QueryParams(
            n=n,
            c=self.c,
            eps=self.eps,
            delta=self.delta,
            sample_scale=self.sample_scale,
        )


def _pick(args, name, getter, profile):
    value = getattr(args, name, None)
    return getter(profile) if value is None else value


@contextlib.contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        try:
            f = open(path, "w", newline="\n")
        except OSError as e:
            raise convert_os_error(e, path=path)
        with f:
            yield f


def _parse_list(text, cast):
    return [cast(item) for item in text.split(",") if item.strip()]


def _load(args, settings):
    return load_edge_list(
        args.graph,
        dedupe=_pick(args, "dedupe", config.get_dedupe, settings.profile),
        undirected=args.undirected,
    )


def _pagerank(graph, settings):
    return reverse_pagerank(
        graph, settings.c, tol=config.get_pagerank_tol(settings.profile)
    )


def _index_for(args, graph, settings):
    if getattr(args, "index", None):
        return deserialize(args.index)
    pr = _pagerank(graph, settings)
    j0 = choose_hub_count(args.hubs, graph, pr, settings.eps, gamma=args.gamma)
    return build_index(graph, pr, settings.c, settings.eps, j0, settings.threads)


def gen(args):
    settings = Settings(args)
    spec = GenSpec(
        args.kind,
        args.n,
        gamma=args.gamma,
        avg_degree=args.davg,
        p=args.p,
        seed=settings.seed,
    )
    graph = generate(spec)
    header = [f"prsim gen {args.kind} n={args.n} seed={settings.seed}"]
    write_edge_list(graph, args.output, original_ids=True, header=header)
    if args.id_map:
        write_id_map(graph, args.id_map)
    print(f"wrote n={graph.n} m={graph.m} to {args.output}", file=sys.stderr)
    return 0


def pagerank(args):
    settings = Settings(args)
    graph = _load(args, settings)
    pr = _pagerank(graph, settings)
    with _output(args.output) as f:
        write_pagerank_tsv(graph, pr, f)
    return 0


def build_index_cmd(args):
    settings = Settings(args)
    graph = _load(args, settings)
    pr = _pagerank(graph, settings)
    j0 = choose_hub_count(args.hubs, graph, pr, settings.eps, gamma=args.gamma)
    index = build_index(graph, pr, settings.c, settings.eps, j0, settings.threads)
    serialize(index, args.output)
    print(
        f"hubs={len(index)} tuples={index.size()} "
        f"build_micros={index.build_micros}",
        file=sys.stderr,
    )
    return 0


def index_stats(args):
    index = deserialize(args.index)
    stats = index.stats()
    lines = [
        ("sha256", sha256_file(args.index)),
        ("n", index.n),
        ("m", index.m),
        ("c", index.c),
        ("eps", index.eps),
        ("r_max", stats["r_max"]),
        ("j0", index.j0),
        ("hub_count", stats["hub_count"]),
        ("tuples", stats["tuples"]),
        ("deepest_level", stats["deepest_level"]),
    ]
    for key, value in lines:
        print(f"{key}\t{value}")
    if args.per_hub:
        for w, count in stats["per_hub"].items():
            print(f"hub\t{w}\t{count}")
    return 0


def query(args):
    settings = Settings(args)
    graph = _load(args, settings)
    params = settings.query_params(graph.n)
    u = graph.dense_id(args.source)
    index = _index_for(args, graph, settings)
    result = single_source(
        graph, index, u, params, Rng(settings.seed), threads=settings.threads
    )
    ranked = result.ranked(include_source=True)
    if args.top is not None:
        ranked = ranked[: args.top]
    with _output(args.output) as f:
        for v, score in ranked:
            f.write(f"{graph.original_id(v)}\t{float(score)!r}\n")
    print(result.stats.summary(), file=sys.stderr)
    return 0


def evaluate(args):
    settings = Settings(args)
    graph = _load(args, settings)
    params = settings.query_params(graph.n)
    index = _index_for(args, graph, settings)
    if args.sources:
        sources = [graph.dense_id(s) for s in _parse_list(args.sources, int)]
    else:
        sources = random_sources(graph, args.queries, settings.seed)
    report = evaluate_queries(
        graph,
        index,
        sources,
        params,
        args.k,
        seed=settings.seed,
        include_baseline=not args.no_baseline,
        gt_pairs=args.gt_pairs,
        cap=config.get_exact_cap(settings.profile),
    )
    with _output(args.output) as f:
        report.write_csv(f)
    return 0


def _sweep_settings(args, settings):
    return SweepSettings(
        c=settings.c,
        eps=settings.eps,
        delta=settings.delta,
        sample_scale=settings.sample_scale,
        hubs=args.hubs,
        queries=args.queries,
        threads=settings.threads,
    )


def _seeds(args, settings):
    return [settings.seed + i for i in range(args.repeats)]


def sweep_gamma_cmd(args):
    settings = Settings(args)
    rows = sweep_gamma(
        args.n,
        args.davg,
        _parse_list(args.gammas, float),
        _seeds(args, settings),
        _sweep_settings(args, settings),
    )
    with _output(args.output) as f:
        write_sweep_csv(rows, f)
    return 0


def sweep_scale_cmd(args):
    settings = Settings(args)
    rows = sweep_scale(
        _parse_list(args.ns, int),
        args.gamma,
        args.davg,
        _seeds(args, settings),
        _sweep_settings(args, settings),
    )
    with _output(args.output) as f:
        write_sweep_csv(rows, f)
    return 0


def sweep_degree_cmd(args):
    settings = Settings(args)
    rows = sweep_degree(
        args.n,
        _parse_list(args.degrees, float),
        _seeds(args, settings),
        _sweep_settings(args, settings),
    )
    with _output(args.output) as f:
        write_sweep_csv(rows, f)
    return 0


def sample(args):
    settings = Settings(args)
    graph = _load(args, settings)
    rng = Rng(settings.seed)
    node = graph.dense_id(args.node)
    orig = graph.original_id
    with _output(args.output) as f:
        for _ in range(args.count):
            if args.what == "walk":
                record = sample_walk(graph, node, settings.c, rng).as_dict()
                record["positions"] = [orig(v) for v in record["positions"]]
                if record["terminal"] is not None:
                    record["terminal"] = orig(record["terminal"])
            elif args.what == "eta":
                success = eta_sample(graph, node, settings.c, rng)
                record = {"node": args.node, "success": success}
            else:
                walker = backward_walk_simple
                if args.what == "bw-vb":
                    walker = backward_walk_vb
                estimate = walker(graph, node, args.level, settings.c, rng)
                record = estimate.as_dict()
                record["target"] = args.node
                record["values"] = {
                    str(orig(v)): x for v, x in sorted(estimate.values.items())
                }
            f.write(json.dumps(record, sort_keys=True) + "\n")
    return 0
