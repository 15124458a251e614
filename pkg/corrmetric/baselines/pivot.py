import numpy as np

from corrmetric.objectives.disagreements import disagreement_vector
from corrmetric.rounding.clustering import Clustering


def pivot(g, seed=0, order=None):
    """Pivot clustering: visit vertices in a uniformly random order; an
    unclustered visited vertex opens a cluster with itself and all its
    unclustered positive neighbours.

    Args:
        g (corrmetric.SignedGraph): the graph
        seed (int, optional): seed of the numpy PCG64 generator drawing the
            order. Defaults to 0.
        order (list, optional): an explicit visiting order, overrides seed.
            Defaults to None.

    Returns:
        corrmetric.Clustering: the clustering, pivots as centres
    """
    if order is None:
        order = np.random.default_rng(seed).permutation(g.n)
    elif sorted(int(u) for u in order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")

    assignment = np.full(g.n, -1, dtype=np.int64)
    pivots = []
    for u in order:
        u = int(u)
        if assignment[u] != -1:
            continue
        label = len(pivots)
        pivots.append(u)
        assignment[u] = label
        for v in g.pos_adj[u]:
            if assignment[v] == -1:
                assignment[v] = label
    return Clustering(assignment, centers=pivots)


def pivot_mean_objective(g, trials=500, seed=0):
    """Mean l_inf objective of Pivot over independent random orders

    Args:
        g (corrmetric.SignedGraph): the graph
        trials (int, optional): number of runs. Defaults to 500.
        seed (int, optional): seed of the generator drawing the orders.
            Defaults to 0.

    Raises:
        ValueError: if trials < 1

    Returns:
        float: the mean objective
    """
    if not isinstance(trials, (int, np.integer)) or isinstance(trials, bool):
        raise TypeError("trials should be an int")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    total = 0
    for _ in range(trials):
        clustering = pivot(g, order=rng.permutation(g.n))
        total += disagreement_vector(g, clustering).max_value
    return total / trials
