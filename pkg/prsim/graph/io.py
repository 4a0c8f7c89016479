"""
Edge-list text files and the dense-id sidecar.

An edge list holds one ``src<whitespace>dst`` pair per line. Lines starting
with ``#`` and blank lines are ignored, LF and CRLF terminators are both
accepted. Ids are arbitrary non-negative integers; they are remapped to dense
ids ``0..n-1`` in ascending order of the original id.
"""
import logging

import numpy as np

from prsim.exc import (
    EmptyGraphError,
    GraphFormatError,
    NodeIdOverflowError,
    convert_os_error,
)
from prsim.graph.csr import Graph

logger = logging.getLogger(__name__)

MAX_NODE_ID = 2**63 - 1


def _parse_id(token, path, line_number, line):
    if not (token.isascii() and token.isdigit()):
        raise GraphFormatError(
            f"expected a non-negative integer id, got {token!r}",
            path=path,
            line_number=line_number,
            line=line,
        )
    value = int(token)
    if value > MAX_NODE_ID:
        raise NodeIdOverflowError(
            f"node id {value} exceeds {MAX_NODE_ID}",
            path=path,
            line_number=line_number,
            line=line,
        )
    return value


def _read_pairs(path):
    src = []
    dst = []
    try:
        # universal newlines take care of CRLF
        with open(path, encoding="utf-8") as f:
            for line_number, raw in enumerate(f, start=1):
                line = raw.rstrip("\r\n")
                stripped = line.strip()
                if not stripped or stripped.startswith("#"):
                    continue
                tokens = stripped.split()
                if len(tokens) != 2:
                    raise GraphFormatError(
                        f"expected 2 ids, found {len(tokens)} fields",
                        path=path,
                        line_number=line_number,
                        line=line,
                    )
                src.append(_parse_id(tokens[0], path, line_number, line))
                dst.append(_parse_id(tokens[1], path, line_number, line))
    except OSError as e:
        raise convert_os_error(e, path=path)
    except UnicodeDecodeError as e:
        raise GraphFormatError(
            f"not a UTF-8 text file (byte {e.start}: {e.reason})", path=path
        )
    return src, dst


def load_edge_list(path, dedupe=True, undirected=False):
    """
    Load a directed graph from an edge-list file.

    :param path: The file to read
    :type path: str or path-like
    :param dedupe: Collapse repeated directed edges into one [default: ``True``]
    :type dedupe: bool
    :param undirected: Treat every line as an undirected edge, emitting it in both
        directions [default: ``False``]
    :type undirected: bool
    :rtype: :class:`Graph <prsim.graph.Graph>`

    Every id appearing in the file becomes a node; nodes without edges cannot
    be expressed in this format.
    """
    path = str(path)
    logger.info(f"Loading edge list {path} (dedupe={dedupe}, undirected={undirected})")
    src, dst = _read_pairs(path)
    if not src:
        raise EmptyGraphError("edge list contains no edges", path=path)

    # ids above the int64 range were rejected while parsing
    raw = np.array(src + dst, dtype=np.int64)
    original_ids, dense = np.unique(raw, return_inverse=True)
    half = len(src)
    graph = Graph.from_edges(
        dense[:half],
        dense[half:],
        n=len(original_ids),
        original_ids=original_ids,
        dedupe=dedupe,
        undirected=undirected,
    )
    self_loops = int(np.count_nonzero(raw[:half] == raw[half:]))
    if self_loops:
        logger.warning(f"{path}: {self_loops} self-loops kept as ordinary edges")
    logger.info(f"Loaded {graph!r} from {path}")
    return graph


def write_edge_list(graph, path, original_ids=False, header=None):
    """
    Write ``graph`` in the edge-list format, edges in out-adjacency order.

    :param original_ids: Write original rather than dense ids
    :type original_ids: bool
    :param header: Optional comment lines written first, each prefixed with ``#``
    :type header: list of str, optional
    """
    src, dst = graph.edges()
    if original_ids:
        src, dst = graph.original_ids[src], graph.original_ids[dst]
    try:
        with open(path, "w", newline="\n") as f:
            for comment in header or ():
                f.write(f"# {comment}\n")
            for x, y in zip(src.tolist(), dst.tolist()):
                f.write(f"{x}\t{y}\n")
    except OSError as e:
        raise convert_os_error(e, path=path)
    logger.info(f"Wrote {graph!r} to {path}")


def write_id_map(graph, path):
    """
    Write the ``orig<TAB>dense`` sidecar of ``graph``.
    """
    try:
        with open(path, "w", newline="\n") as f:
            for dense, orig in enumerate(graph.original_ids.tolist()):
                f.write(f"{orig}\t{dense}\n")
    except OSError as e:
        raise convert_os_error(e, path=path)


def read_id_map(path):
    """
    Read an ``orig<TAB>dense`` sidecar into a ``{orig: dense}`` dict.
    """
    id_map = {}
    try:
        with open(path, encoding="utf-8") as f:
            for line_number, raw in enumerate(f, start=1):
                line = raw.rstrip("\r\n")
                if not line:
                    continue
                fields = line.split("\t")
                if len(fields) != 2:
                    raise GraphFormatError(
                        "expected orig<TAB>dense",
                        path=str(path),
                        line_number=line_number,
                        line=line,
                    )
                orig = _parse_id(fields[0], str(path), line_number, line)
                id_map[orig] = _parse_id(fields[1], str(path), line_number, line)
    except OSError as e:
        raise convert_os_error(e, path=path)
    return id_map
