from fractions import Fraction

import numpy as np

from corrmetric.metrics.distance_oracle import DistanceOracle, DENSE_EXACT
from corrmetric.settings import DEFAULT_SETTINGS


def check_dense_capacity(n, settings=None):
    settings = settings or DEFAULT_SETTINGS
    if n > settings.dense_max_vertices:
        raise ValueError(
            f"n={n} exceeds the dense table capacity "
            f"({settings.dense_max_vertices} vertices), "
            "use the sparse oracle instead"
        )


def common_pos_counts_dense(g, settings=None):
    """Counts common positive neighbours of every pair of vertices.

    C = (A + I)^2 where A is the positive adjacency matrix; self-loops are
    included so that C[u, u] = deg_plus[u].

    Args:
        g (corrmetric.SignedGraph): the graph
        settings (corrmetric.Settings, optional): capacity settings.
            Defaults to None.

    Raises:
        ValueError: if n exceeds settings.dense_max_vertices

    Returns:
        np.ndarray: symmetric n x n int64 matrix
    """
    check_dense_capacity(g.n, settings)
    adjacency = g.adjacency_matrix(self_loops=True, dtype=np.float64).toarray()
    # float64 products are exact for counts below 2**53
    counts = adjacency @ adjacency
    return np.rint(counts).astype(np.int64)


def distance_from_count(n, deg_u, deg_v, c):
    """Correlation distance from neighbourhood sizes

    d = 1 - c / (deg_u + deg_v - c), by inclusion-exclusion equal to
    1 - |N+_u & N+_v| / (n - |N-_u & N-_v|).

    Args:
        n (int): number of vertices
        deg_u (int): |N+_u| (self-loop included)
        deg_v (int): |N+_v| (self-loop included)
        c (int): |N+_u & N+_v|

    Raises:
        ValueError: if the counts are inconsistent

    Returns:
        Fraction: the exact distance
    """
    if not (1 <= deg_u <= n and 1 <= deg_v <= n):
        raise ValueError(
            f"internal invariant violated: degrees ({deg_u}, {deg_v}) "
            f"outside [1, {n}]"
        )
    if not 0 <= c <= min(deg_u, deg_v):
        raise ValueError(
            f"internal invariant violated: common count {c} incompatible "
            f"with degrees ({deg_u}, {deg_v})"
        )
    union = deg_u + deg_v - c
    if union < 1 or union > n:
        raise ValueError(
            f"internal invariant violated: union size {union} outside [1, {n}]"
        )
    return Fraction(union - c, union)


class DenseOracle(DistanceOracle):
    """
    Exact correlation metric for every pair, backed by the common count
    matrix

    Args:
        graph (corrmetric.SignedGraph): the graph
        counts (np.ndarray): the common positive neighbour counts

    Attributes:
        counts (np.ndarray): the common positive neighbour counts
        deg_plus (np.ndarray): positive degrees with self-loops
    """

    def __init__(self, graph, counts) -> None:
        super().__init__(graph, DENSE_EXACT)
        self.counts = counts
        self.deg_plus = graph.deg_plus

    def row(self, u):
        """Numerators and denominators of d(u, .) as int64 arrays"""
        union = self.deg_plus[u] + self.deg_plus - self.counts[u]
        return union - self.counts[u], union

    def _query(self, u, v):
        c = int(self.counts[u, v])
        union = int(self.deg_plus[u] + self.deg_plus[v]) - c
        return Fraction(union - c, union)

    def ball(self, u, radius):
        radius = self.as_radius(radius)
        nums, dens = self.row(u)
        inside = nums * radius.denominator <= radius.numerator * dens
        inside[u] = False
        vertices = np.flatnonzero(inside)
        distances = [Fraction(int(a), int(b)) for a, b in zip(nums[vertices], dens[vertices])]
        return vertices, distances

    def stored_pairs(self):
        for u in range(self.n):
            nums, dens = self.row(u)
            for v in range(u + 1, self.n):
                yield u, v, Fraction(int(nums[v]), int(dens[v]))

    def numerator_denominator_tables(self):
        union = self.deg_plus[:, None] + self.deg_plus[None, :] - self.counts
        nums = union - self.counts
        return nums, union

    def to_dense_array(self):
        nums, dens = self.numerator_denominator_tables()
        return nums / dens


def build_dense_oracle(g, settings=None):
    """Builds the exact correlation metric for all pairs from the squared
    positive adjacency matrix

    Args:
        g (corrmetric.SignedGraph): the graph
        settings (corrmetric.Settings, optional): capacity settings.
            Defaults to None.

    Raises:
        ValueError: if n exceeds settings.dense_max_vertices

    Returns:
        DenseOracle: the oracle
    """
    return DenseOracle(g, common_pos_counts_dense(g, settings))
