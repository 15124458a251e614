from fractions import Fraction

import numpy as np

from corrmetric.helpers import exact_sum
from corrmetric.metrics.distance_oracle import SPARSE_EXACT
from corrmetric.settings import DEFAULT_SETTINGS


class FractionalCostVector:
    """
    Per-vertex fractional cost of a distance function

    Args:
        values (list): y_hat(u) for every vertex, Fractions for exact
            oracles, floats otherwise

    Attributes:
        values (list): per-vertex costs
        exact (bool): True if the values are exact Fractions
    """

    def __init__(self, values) -> None:
        self.values = list(values)
        self.exact = all(isinstance(v, Fraction) for v in self.values)

    @property
    def max_value(self):
        if not self.values:
            return Fraction(0) if self.exact else 0.0
        return max(self.values)

    def as_array(self):
        return np.array([float(v) for v in self.values])

    def __getitem__(self, u):
        return self.values[u]

    def __len__(self):
        return len(self.values)


def fractional_cost(g, oracle, settings=None):
    """y_hat(u) = sum over positive neighbours v != u of d(u, v) plus the
    sum over negative neighbours of 1 - d(u, v)

    With exact oracles the sums are exact (unless
    settings.exact_fractional_cost is False). Sparse oracles only visit
    their stored pairs since implicit pairs at distance 1 cost nothing on
    negative edges and 1 on positive ones, and positive edges are always
    stored.

    Args:
        g (corrmetric.SignedGraph): the graph
        oracle (corrmetric.DistanceOracle): the distances
        settings (corrmetric.Settings, optional): Defaults to None.

    Returns:
        FractionalCostVector: the costs
    """
    settings = settings or DEFAULT_SETTINGS
    if oracle.n != g.n:
        raise ValueError(f"oracle has {oracle.n} vertices but the graph has {g.n}")

    if not oracle.is_exact or not settings.exact_fractional_cost:
        table = oracle.to_dense_array()
        positive = g.adjacency_matrix(self_loops=True, dtype=bool).toarray()
        cost = np.where(positive, table, 1.0 - table)
        np.fill_diagonal(cost, 0.0)
        return FractionalCostVector(cost.sum(axis=1).tolist())

    if oracle.kind == SPARSE_EXACT:
        values = []
        for u in range(g.n):
            partners, nums, dens = oracle.row(u)
            positive = np.isin(partners, g.pos_adj[u])
            # edge-adjusted numerators: d on positive edges, 1 - d otherwise
            adjusted = np.where(positive, nums, dens - nums)
            values.append(exact_sum(adjusted, dens))
        return FractionalCostVector(values)

    values = []
    for u in range(g.n):
        nums, dens = oracle.row(u)
        positive = np.zeros(g.n, dtype=bool)
        positive[list(g.pos_adj[u])] = True
        adjusted = np.where(positive, nums, dens - nums)
        adjusted[u] = 0
        values.append(exact_sum(adjusted, dens))
    return FractionalCostVector(values)
