import numpy as np
from scipy.sparse import coo_matrix

from corrmetric.graph.degree_profile import PosDegreeProfile


class SignedGraph:
    """
    A complete signed graph given by its positive edges.

    Every vertex carries an implicit positive self-loop which is not stored
    in the adjacency lists. Negative edges are the complement of the
    positive ones and are never materialised.

    Args:
        n (int): number of vertices
        pos_adj (list): for every vertex, its sorted positive neighbours
            (without the vertex itself)

    Attributes:
        n (int): number of vertices
        pos_adj (list of tuple): sorted positive neighbours of each vertex
        degree_profile (PosDegreeProfile): positive degrees with self-loops

    Example::

        g = SignedGraph.from_edges(3, [(0, 1), (1, 2)])
        g.positive_neighborhood_with_self(1)  # [0, 1, 2]
    """

    def __init__(self, n, pos_adj) -> None:
        self.n = n
        self.pos_adj = [tuple(int(v) for v in nbrs) for nbrs in pos_adj]
        self.check_invariants()

        self._pos_sets = [frozenset(nbrs) for nbrs in self.pos_adj]
        self.degree_profile = PosDegreeProfile(
            [1 + len(nbrs) for nbrs in self.pos_adj]
        )

    @property
    def n(self):
        return self._n

    @n.setter
    def n(self, value):
        if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
            raise TypeError("n should be an int")
        if value < 1:
            raise ValueError("n should be a positive integer")
        self._n = int(value)

    @classmethod
    def from_edges(cls, n, edges):
        """Builds a SignedGraph from a list of unordered positive pairs.

        Self-pairs are dropped and duplicates (in either orientation) are
        merged.

        Args:
            n (int): number of vertices
            edges (iterable): pairs (u, v) with 0 <= u, v < n

        Raises:
            ValueError: if a vertex id is out of range

        Returns:
            SignedGraph: the graph
        """
        if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
            raise TypeError("n should be an int")
        if n < 1:
            raise ValueError("n should be a positive integer")
        neighbours = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            for vertex in (u, v):
                if vertex < 0 or vertex >= n:
                    raise ValueError(f"vertex {vertex} out of range for n={n}")
            if u == v:
                continue
            neighbours[u].add(v)
            neighbours[v].add(u)
        return cls(n, [sorted(nbrs) for nbrs in neighbours])

    def check_invariants(self):
        """Checks symmetry, sortedness, absence of self entries and bounds

        Raises:
            ValueError: if the adjacency lists are inconsistent

        Returns:
            bool: True if everything's alright
        """
        if len(self.pos_adj) != self.n:
            raise ValueError(
                f"expected {self.n} adjacency lists, got {len(self.pos_adj)}"
            )
        for u, nbrs in enumerate(self.pos_adj):
            for i, v in enumerate(nbrs):
                if v < 0 or v >= self.n:
                    raise ValueError(f"vertex {v} out of range for n={self.n}")
                if v == u:
                    raise ValueError(f"vertex {u} lists itself as a neighbour")
                if i > 0 and nbrs[i - 1] >= v:
                    raise ValueError(f"adjacency list of {u} is not strictly sorted")
        for u, nbrs in enumerate(self.pos_adj):
            for v in nbrs:
                # binary search would do, but lists are short and this runs once
                if u not in self.pos_adj[v]:
                    raise ValueError(f"edge ({u}, {v}) is not symmetric")
        return True

    def _check_vertex(self, u):
        if u < 0 or u >= self.n:
            raise ValueError(f"vertex {u} out of range for n={self.n}")

    @property
    def deg_plus(self):
        return self.degree_profile.deg_plus

    @property
    def delta_max(self):
        return self.degree_profile.delta_max

    @property
    def num_positive_edges(self):
        return sum(len(nbrs) for nbrs in self.pos_adj) // 2

    def is_positive(self, u, v):
        """True if (u, v) is a positive edge (self-loops included)"""
        return u == v or v in self._pos_sets[u]

    def positive_neighborhood_with_self(self, u):
        """Returns N+_u, i.e. the positive neighbours of u and u itself

        Args:
            u (int): the vertex

        Returns:
            list: the sorted neighbourhood, of size deg_plus[u]
        """
        self._check_vertex(u)
        nbrs = list(self.pos_adj[u])
        # insert u at its sorted position
        position = np.searchsorted(nbrs, u) if nbrs else 0
        nbrs.insert(int(position), u)
        return nbrs

    def positive_set_with_self(self, u):
        """Returns N+_u as a frozenset"""
        return self._pos_sets[u] | {u}

    def two_hop_positive(self, u):
        """Returns all vertices v with N+_u and N+_v intersecting, i.e.
        reachable from u through at most two positive edges (u included)

        Args:
            u (int): the vertex

        Returns:
            list: the sorted two-hop neighbourhood
        """
        self._check_vertex(u)
        reached = {u}
        for w in self.pos_adj[u]:
            reached.add(w)
            reached.update(self.pos_adj[w])
        return sorted(reached)

    def edges(self):
        """Returns the positive edges as a sorted list of pairs (u, v), u < v"""
        return [(u, v) for u, nbrs in enumerate(self.pos_adj) for v in nbrs if u < v]

    def adjacency_matrix(self, self_loops=True, dtype=np.int64):
        """Positive adjacency matrix as a scipy.sparse CSR matrix

        Args:
            self_loops (bool, optional): put ones on the diagonal.
                Defaults to True.
            dtype (optional): the matrix dtype. Defaults to np.int64.

        Returns:
            scipy.sparse.csr_matrix: the n x n adjacency matrix
        """
        rows = np.repeat(
            np.arange(self.n, dtype=np.int64),
            [len(nbrs) for nbrs in self.pos_adj],
        )
        cols = np.fromiter(
            (v for nbrs in self.pos_adj for v in nbrs),
            dtype=np.int64,
            count=len(rows),
        )
        if self_loops:
            diagonal = np.arange(self.n, dtype=np.int64)
            rows = np.concatenate([rows, diagonal])
            cols = np.concatenate([cols, diagonal])
        data = np.ones(len(rows), dtype=dtype)
        return coo_matrix((data, (rows, cols)), shape=(self.n, self.n)).tocsr()

    def __eq__(self, other):
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self.n == other.n and self.pos_adj == other.pos_adj

    def __repr__(self):
        return f"SignedGraph(n={self.n}, positive_edges={self.num_positive_edges})"


def build_from_edges(n, edges):
    """Builds a SignedGraph from its positive pairs, see
    SignedGraph.from_edges"""
    return SignedGraph.from_edges(n, edges)


def graph_statistics(g):
    """Dataset statistics of a signed graph

    Args:
        g (SignedGraph): the graph

    Returns:
        dict: number of vertices, number of positive edges and maximum
            positive degree (self-loop not counted, as in edge-list
            statistics)
    """
    return {
        "vertices": g.n,
        "positive_edges": g.num_positive_edges,
        "max_positive_degree": g.delta_max - 1,
    }
