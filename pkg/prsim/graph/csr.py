"""
Immutable compressed-sparse-row directed graph.

Both adjacency directions are stored. In-adjacency lists are ordered by
ascending source id; out-adjacency lists are ordered by ascending in-degree of
the target, ties broken by ascending target id. The backward walk samplers
rely on the out-adjacency order: the out-neighbors of ``x`` with in-degree at
most some threshold always form a prefix of ``x``'s list.
"""
import logging
import typing
from functools import cached_property

import numpy as np

from prsim.exc import NodeOutOfRangeError, PRSimUsageError

logger = logging.getLogger(__name__)


class AdjacencyView(typing.NamedTuple):
    """
    Plain-list copies of the CSR arrays. Scalar indexing of python lists is an
    order of magnitude cheaper than indexing numpy arrays, which matters in the
    per-step loops of the samplers.
    """

    in_ptr: typing.List[int]
    in_idx: typing.List[int]
    out_ptr: typing.List[int]
    out_idx: typing.List[int]
    in_deg: typing.List[int]


def _frozen(arr, dtype=np.int64):
    arr = np.ascontiguousarray(arr, dtype=dtype)
    arr.setflags(write=False)
    return arr


def _indptr(keys, n):
    counts = np.bincount(keys, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return indptr


def _in_csr(n, src, dst):
    # group edges by target, sources ascending within a group
    order = np.lexsort((src, dst))
    return _indptr(dst, n), src[order]


def _out_csr_sorted_by_indegree(n, in_indptr, in_indices, in_deg):
    """
    Build the out-adjacency the way the preprocessing step describes it: form
    a tuple (x, y, d_in(y)) per edge, sort the tuples by d_in(y), then append
    each y to x's list in that order. Both sorts are stable and the tuples start
    out grouped by ascending y, so equal in-degrees keep ascending target ids.
    """
    targets = np.repeat(np.arange(n, dtype=np.int64), np.diff(in_indptr))
    sources = np.asarray(in_indices, dtype=np.int64)
    by_indegree = np.argsort(in_deg[targets], kind="stable")
    sources = sources[by_indegree]
    targets = targets[by_indegree]
    by_source = np.argsort(sources, kind="stable")
    return _indptr(sources, n), targets[by_source]


class Graph:
    """
    A directed graph over dense node ids ``0..n-1``.

    Construct graphs with :meth:`Graph.from_edges` or
    :func:`prsim.graph.load_edge_list`; a ``Graph`` is never mutated after
    construction and is safe to share between threads.

    :param n: Number of nodes
    :type n: int
    :param in_indptr: CSR offsets of the in-adjacency
    :param in_indices: CSR targets of the in-adjacency
    :param out_indptr: CSR offsets of the out-adjacency
    :param out_indices: CSR targets of the out-adjacency, in-degree sorted
    :param original_ids: ``original_ids[v]`` is the id node ``v`` had in its
        input. Defaults to the identity.
    """

    def __init__(
        self, n, in_indptr, in_indices, out_indptr, out_indices, original_ids=None
    ):
        self._n = int(n)
        self._in_indptr = _frozen(in_indptr)
        self._in_indices = _frozen(in_indices)
        self._out_indptr = _frozen(out_indptr)
        self._out_indices = _frozen(out_indices)
        self._in_deg = _frozen(np.diff(self._in_indptr))
        self._out_deg = _frozen(np.diff(self._out_indptr))
        if original_ids is None:
            original_ids = np.arange(self._n, dtype=np.int64)
        self._original_ids = _frozen(original_ids)
        if len(self._original_ids) != self._n:
            raise PRSimUsageError(
                f"original_ids has {len(self._original_ids)} entries for n={n}"
            )

    @classmethod
    def from_edges(
        cls, src, dst, n=None, original_ids=None, dedupe=True, undirected=False
    ):
        """
        Build a graph from parallel arrays of dense source and target ids.

        :param src: Edge sources
        :type src: array-like of int
        :param dst: Edge targets
        :type dst: array-like of int
        :param n: Node count. Defaults to one more than the largest id seen.
        :type n: int, optional
        :param original_ids: Original id of every dense node
        :type original_ids: array-like of int, optional
        :param dedupe: Collapse repeated directed edges into one
        :type dedupe: bool
        :param undirected: Emit each input edge in both directions
        :type undirected: bool
        """
        src = np.asarray(src, dtype=np.int64).ravel()
        dst = np.asarray(dst, dtype=np.int64).ravel()
        if src.shape != dst.shape:
            raise PRSimUsageError("src and dst must have the same length")
        if n is None:
            n = int(max(src.max(initial=-1), dst.max(initial=-1))) + 1
        if len(src) and (
            min(src.min(), dst.min()) < 0 or max(src.max(), dst.max()) >= n
        ):
            raise PRSimUsageError(f"edge endpoints must lie in [0, {n})")

        if undirected:
            src, dst = np.concatenate((src, dst)), np.concatenate((dst, src))
        if dedupe and len(src):
            keys = np.unique(src * n + dst)
            dropped = len(src) - len(keys)
            if dropped:
                logger.debug(f"dropped {dropped} duplicate edges")
            src, dst = keys // n, keys % n

        in_indptr, in_indices = _in_csr(n, src, dst)
        in_deg = np.diff(in_indptr)
        out_indptr, out_indices = _out_csr_sorted_by_indegree(
            n, in_indptr, in_indices, in_deg
        )
        return cls(n, in_indptr, in_indices, out_indptr, out_indices, original_ids)

    def __repr__(self):
        return f"{self.__class__.__name__}(n={self.n}, m={self.m})"

    def __eq__(self, other):
        """
        Structural equality: same node count and identical adjacency arrays.
        Original ids are not compared.
        """
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self._in_indptr, other._in_indptr)
            and np.array_equal(self._in_indices, other._in_indices)
            and np.array_equal(self._out_indptr, other._out_indptr)
            and np.array_equal(self._out_indices, other._out_indices)
        )

    __hash__ = None  # type: ignore

    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return len(self._out_indices)

    @property
    def in_indptr(self):
        return self._in_indptr

    @property
    def in_indices(self):
        return self._in_indices

    @property
    def out_indptr(self):
        return self._out_indptr

    @property
    def out_indices(self):
        return self._out_indices

    @property
    def in_deg(self):
        return self._in_deg

    @property
    def out_deg(self):
        return self._out_deg

    @property
    def original_ids(self):
        return self._original_ids

    @cached_property
    def id_map(self):
        """
        ``{original id: dense id}`` for every node.
        """
        return {int(orig): dense for dense, orig in enumerate(self._original_ids)}

    @cached_property
    def adjacency(self):
        """
        :class:`AdjacencyView` of this graph, built on first access.
        """
        logger.debug(f"materializing adjacency lists for {self!r}")
        return AdjacencyView(
            in_ptr=self._in_indptr.tolist(),
            in_idx=self._in_indices.tolist(),
            out_ptr=self._out_indptr.tolist(),
            out_idx=self._out_indices.tolist(),
            in_deg=self._in_deg.tolist(),
        )

    def check_node(self, v):
        if not 0 <= v < self._n:
            raise NodeOutOfRangeError(v, self._n)
        return int(v)

    def dense_id(self, original):
        try:
            return self.id_map[original]
        except KeyError:
            raise NodeOutOfRangeError(original, self._n)

    def original_id(self, v):
        return int(self._original_ids[self.check_node(v)])

    def in_neighbors(self, v):
        v = self.check_node(v)
        return self._in_indices[self._in_indptr[v] : self._in_indptr[v + 1]]

    def out_neighbors(self, v):
        v = self.check_node(v)
        return self._out_indices[self._out_indptr[v] : self._out_indptr[v + 1]]

    def degrees(self, v):
        """
        ``(in_degree, out_degree)`` of node ``v``.
        """
        v = self.check_node(v)
        return int(self._in_deg[v]), int(self._out_deg[v])

    def edges(self):
        """
        ``(src, dst)`` arrays in out-adjacency order.
        """
        src = np.repeat(np.arange(self._n, dtype=np.int64), self._out_deg)
        return src, self._out_indices.copy()

    def is_out_sorted(self):
        """
        One pass over the out-adjacency: every list must be non-decreasing in
        target in-degree.
        """
        if self.m < 2:
            return True
        keys = self._in_deg[self._out_indices]
        descents = np.flatnonzero(keys[1:] < keys[:-1]) + 1
        # a descent at the start of a list is a list boundary, not a violation
        list_starts = self._out_indptr[1:-1]
        return bool(np.all(np.isin(descents, list_starts)))

    def check_invariants(self):
        """
        Verify sortedness, degree sums and that both adjacency directions
        describe the same edge multiset. Returns the list of violated invariant
        names; empty when the graph is well formed.
        """
        violated = []
        if not self.is_out_sorted():
            violated.append("out-adjacency sorted by target in-degree")
        if int(self._in_deg.sum()) != self.m or int(self._out_deg.sum()) != self.m:
            violated.append("degree sums equal m")
        src, dst = self.edges()
        in_src = self._in_indices
        in_dst = np.repeat(np.arange(self._n, dtype=np.int64), self._in_deg)
        out_keys = np.sort(src * self._n + dst)
        in_keys = np.sort(in_src * self._n + in_dst)
        if not np.array_equal(out_keys, in_keys):
            violated.append("in and out adjacency agree")
        return violated


def sort_out_adjacency_by_indegree(graph):
    """
    Return a graph whose out-adjacency lists are re-derived from the
    in-adjacency, ordered by ascending target in-degree and then target id.

    Graphs built by this package already satisfy the order, so this is the
    identity on them; it exists for graphs assembled from raw CSR arrays.
    """
    out_indptr, out_indices = _out_csr_sorted_by_indegree(
        graph.n, graph.in_indptr, graph.in_indices, graph.in_deg
    )
    return Graph(
        graph.n,
        graph.in_indptr,
        graph.in_indices,
        out_indptr,
        out_indices,
        graph.original_ids,
    )
