import math

import numpy as np


class DisagreementVector:
    """
    Number of disagreeing edges incident to every vertex

    Args:
        y (array-like): per-vertex counts

    Attributes:
        y (np.ndarray): per-vertex counts
    """

    def __init__(self, y) -> None:
        self.y = np.asarray(y, dtype=np.int64)
        if self.y.size and self.y.min() < 0:
            raise ValueError("disagreement counts must be non-negative")

    @property
    def max_value(self):
        return int(self.y.max()) if self.y.size else 0

    @property
    def total(self):
        return int(self.y.sum())

    def lp_norm(self, p):
        return lp_norm_objective(self, p)

    def __getitem__(self, u):
        return int(self.y[u])

    def __len__(self):
        return len(self.y)

    def __iter__(self):
        return (int(value) for value in self.y)


def disagreement_vector(g, clustering):
    """Counts, for every vertex u, the positive edges to other clusters and
    the negative edges inside its own cluster

    Negative edges inside C(u) are |C(u)| - 1 minus the positive neighbours
    of u in C(u).

    Args:
        g (corrmetric.SignedGraph): the graph
        clustering (corrmetric.Clustering): the clustering

    Raises:
        ValueError: if the clustering and the graph sizes differ

    Returns:
        DisagreementVector: the counts
    """
    if clustering.n != g.n:
        raise ValueError(
            f"clustering has {clustering.n} vertices but the graph has {g.n}"
        )
    labels = clustering.assignment
    sizes = np.bincount(labels, minlength=clustering.num_clusters)
    y = np.zeros(g.n, dtype=np.int64)
    for u, nbrs in enumerate(g.pos_adj):
        nbrs = np.asarray(nbrs, dtype=np.int64)
        inside = int(np.count_nonzero(labels[nbrs] == labels[u])) if len(nbrs) else 0
        cut_positive = len(nbrs) - inside
        inner_negative = sizes[labels[u]] - 1 - inside
        y[u] = cut_positive + inner_negative
    return DisagreementVector(y)


def lp_norm_objective(y, p):
    """l_p norm of a disagreement vector

    Args:
        y (DisagreementVector, array-like): the counts
        p (float): the norm, > 0, or math.inf / "inf" for the max

    Raises:
        ValueError: if p <= 0

    Returns:
        float: max(y) for p = inf, sum(y) for p = 1, else (sum y**p)**(1/p)
    """
    if isinstance(y, DisagreementVector):
        y = y.y
    y = np.asarray(y, dtype=float)
    if isinstance(p, str):
        if p.lower() not in ["inf", "infinity"]:
            raise ValueError(f"unknown norm {p}")
        p = math.inf
    if p <= 0:
        raise ValueError(f"p must be positive, got {p}")
    if y.size == 0:
        return 0.0
    if math.isinf(p):
        return float(y.max())
    if p == 1:
        return float(y.sum())
    return float(np.sum(y**p) ** (1 / p))
