from prsim.graph.csr import AdjacencyView, Graph, sort_out_adjacency_by_indegree
from prsim.graph.io import load_edge_list, read_id_map, write_edge_list, write_id_map

__all__ = (
    "AdjacencyView",
    "Graph",
    "sort_out_adjacency_by_indegree",
    "load_edge_list",
    "write_edge_list",
    "write_id_map",
    "read_id_map",
    "degrees",
)


def degrees(graph, v):
    """
    ``(in_degree, out_degree)`` of node ``v`` in ``graph``.
    """
    return graph.degrees(v)
