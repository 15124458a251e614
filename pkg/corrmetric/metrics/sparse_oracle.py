from fractions import Fraction

import numpy as np

from corrmetric.metrics.distance_oracle import DistanceOracle, SPARSE_EXACT


class SparseOracle(DistanceOracle):
    """
    Exact correlation metric restricted to two-hop pairs. Every pair that is
    not stored has disjoint positive neighbourhoods and distance 1.

    Rows are kept in CSR layout: the stored partners of u are
    indices[indptr[u]:indptr[u + 1]] (sorted), with distances
    nums / dens at the same positions.

    Args:
        graph (corrmetric.SignedGraph): the graph
        indptr (np.ndarray): row pointers
        indices (np.ndarray): stored partners
        nums (np.ndarray): distance numerators
        dens (np.ndarray): distance denominators
    """

    def __init__(self, graph, indptr, indices, nums, dens) -> None:
        super().__init__(graph, SPARSE_EXACT)
        self.indptr = indptr
        self.indices = indices
        self.nums = nums
        self.dens = dens

    @property
    def num_stored_pairs(self):
        return len(self.indices) // 2

    def row(self, u):
        """Stored partners of u with numerators and denominators"""
        start, end = self.indptr[u], self.indptr[u + 1]
        return self.indices[start:end], self.nums[start:end], self.dens[start:end]

    def _query(self, u, v):
        partners, nums, dens = self.row(u)
        position = np.searchsorted(partners, v)
        if position < len(partners) and partners[position] == v:
            return Fraction(int(nums[position]), int(dens[position]))
        return Fraction(1)

    def ball(self, u, radius):
        radius = self.as_radius(radius)
        if radius >= 1:
            raise ValueError(
                "sparse oracles only answer balls of radius < 1, "
                f"got {radius}"
            )
        partners, nums, dens = self.row(u)
        inside = nums * radius.denominator <= radius.numerator * dens
        distances = [
            Fraction(int(a), int(b)) for a, b in zip(nums[inside], dens[inside])
        ]
        return partners[inside], distances

    def stored_pairs(self):
        for u in range(self.n):
            partners, nums, dens = self.row(u)
            for v, a, b in zip(partners, nums, dens):
                if u < v:
                    yield u, int(v), Fraction(int(a), int(b))


def build_sparse_oracle(g):
    """Builds the exact correlation metric over two-hop pairs.

    The sparse product (A + I)^2 only has entries for pairs sharing a
    positive neighbour, which are exactly the pairs at distance < 1.

    Args:
        g (corrmetric.SignedGraph): the graph

    Returns:
        SparseOracle: the oracle
    """
    adjacency = g.adjacency_matrix(self_loops=True)
    counts = (adjacency @ adjacency).tocsr()
    counts.sort_indices()
    counts.setdiag(0)
    counts.eliminate_zeros()

    deg = g.deg_plus
    rows = np.repeat(np.arange(g.n), np.diff(counts.indptr))
    common = counts.data.astype(np.int64)
    union = deg[rows] + deg[counts.indices] - common
    return SparseOracle(
        g,
        indptr=counts.indptr.astype(np.int64),
        indices=counts.indices.astype(np.int64),
        nums=union - common,
        dens=union,
    )
