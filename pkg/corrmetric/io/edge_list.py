import os

import numpy as np

from corrmetric.graph.signed_graph import SignedGraph
from corrmetric.helpers import ensure_parent_dir


class EdgeList:
    """
    Positive edges read from a whitespace-separated edge list

    Args:
        n (int): number of vertices
        edges (list): deduplicated pairs (u, v), u < v, internal ids, in
            order of first appearance
        id_map (dict): external id -> internal id

    Attributes:
        n (int): number of vertices
        edges (list): deduplicated internal pairs
        id_map (dict): external id -> internal id
        external_ids (list): internal id -> external id
    """

    def __init__(self, n, edges, id_map) -> None:
        self.n = n
        self.edges = edges
        self.id_map = id_map
        self.external_ids = [None] * n
        for external, internal in id_map.items():
            self.external_ids[internal] = external

    def to_graph(self):
        return SignedGraph.from_edges(self.n, self.edges)

    def __iter__(self):
        # unpacks as n, edges, id_map
        return iter((self.n, self.edges, self.id_map))


def _lines(stream):
    if isinstance(stream, str):
        return stream.splitlines()
    return stream


def parse_edge_list(stream):
    """Reads a SNAP-style edge list.

    Every non-empty line not starting with '#' holds two integer vertex
    ids. Ids are remapped to 0..n-1 in order of first appearance, pairs are
    undirected and deduplicated. A self-pair "v v" only declares v.

    Args:
        stream (iterable of str, str): the lines, e.g. an open file

    Raises:
        ValueError: if a line is malformed (the message gives its number)

    Returns:
        EdgeList: the parsed edge list, unpacks as (n, edges, id_map)
    """
    id_map = {}
    seen = set()
    edges = []
    for line_number, line in enumerate(_lines(stream), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ValueError(
                f"line {line_number}: expected two vertex ids, got {line!r}"
            )
        try:
            external = [int(token) for token in tokens]
        except ValueError:
            raise ValueError(
                f"line {line_number}: vertex ids must be integers, got {line!r}"
            )
        ids = []
        for vertex in external:
            if vertex not in id_map:
                id_map[vertex] = len(id_map)
            ids.append(id_map[vertex])
        u, v = min(ids), max(ids)
        if u != v and (u, v) not in seen:
            seen.add((u, v))
            edges.append((u, v))
    return EdgeList(len(id_map), edges, id_map)


def load_edge_list(filename):
    """Reads an edge list file, see parse_edge_list"""
    with open(filename, "r") as f:
        return parse_edge_list(f)


def write_edge_list(g, filename, external_ids=None):
    """Writes the positive edges of g, one "u v" pair per line.

    Every vertex is first declared by a self-pair line so that isolated
    vertices and the vertex order survive a round trip through
    parse_edge_list.

    Args:
        g (corrmetric.SignedGraph): the graph
        filename (str): the output file
        external_ids (list, optional): external id of every vertex.
            Defaults to None (internal ids).
    """
    ids = list(range(g.n)) if external_ids is None else list(external_ids)
    ensure_parent_dir(filename)
    with open(filename, "w") as f:
        f.write(f"# vertices: {g.n} positive edges: {g.num_positive_edges}\n")
        for u in range(g.n):
            f.write(f"{ids[u]} {ids[u]}\n")
        for u, v in g.edges():
            f.write(f"{ids[u]} {ids[v]}\n")


def write_clustering(clustering, filename, external_ids=None):
    """Writes "vertex,cluster" CSV rows, vertices in external ids

    Args:
        clustering (corrmetric.Clustering): the clustering
        filename (str): the output file, must end with .csv
        external_ids (list, optional): external id of every vertex.
            Defaults to None.
    """
    if not filename.endswith(".csv"):
        raise ValueError("filename must end with .csv")
    ids = np.arange(clustering.n) if external_ids is None else np.asarray(external_ids)
    ensure_parent_dir(filename)
    data = np.column_stack([ids, clustering.assignment])
    np.savetxt(
        filename,
        data,
        fmt="%d",
        delimiter=",",
        header="vertex,cluster",
        comments="",
    )
    return os.path.abspath(filename)
