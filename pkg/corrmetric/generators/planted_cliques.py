import numpy as np

from corrmetric.graph.signed_graph import SignedGraph
from corrmetric.helpers import n_pairs, pair_from_index
from corrmetric.rounding.clustering import Clustering


def planted_cliques(k, size):
    """Disjoint positive cliques, every other pair negative

    Args:
        k (int): number of cliques
        size (int): vertices per clique

    Returns:
        tuple: the SignedGraph (n = k * size) and the ground-truth
            Clustering (vertex u in clique u // size)
    """
    for name, value in [("k", k), ("size", size)]:
        if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
            raise TypeError(f"{name} should be an int")
        if value < 1:
            raise ValueError(f"{name} must be >= 1")
    n = k * size
    pos_adj = []
    for u in range(n):
        start = (u // size) * size
        pos_adj.append([v for v in range(start, start + size) if v != u])
    truth = Clustering(np.arange(n) // size)
    return SignedGraph(n, pos_adj), truth


def flip_noise(g, flips, seed=0):
    """Toggles the sign of `flips` distinct pairs drawn uniformly among the
    C(n, 2) pairs of distinct vertices

    Args:
        g (corrmetric.SignedGraph): the clean graph
        flips (int): number of pairs to toggle
        seed (int, optional): seed of the numpy generator. Defaults to 0.

    Raises:
        ValueError: if flips > C(n, 2)

    Returns:
        corrmetric.SignedGraph: the noisy graph
    """
    total = n_pairs(g.n)
    if flips < 0 or flips > total:
        raise ValueError(f"flips must lie in [0, {total}], got {flips}")
    rng = np.random.default_rng(seed)
    chosen = rng.choice(total, size=flips, replace=False)
    return toggle_pairs(g, *pair_from_index(chosen, g.n))


def toggle_pairs(g, us, vs):
    """Toggles the sign of every pair (us[i], vs[i]); pairs must be
    distinct"""
    neighbours = [set(nbrs) for nbrs in g.pos_adj]
    for u, v in zip(us, vs):
        u, v = int(u), int(v)
        if v in neighbours[u]:
            neighbours[u].discard(v)
            neighbours[v].discard(u)
        else:
            neighbours[u].add(v)
            neighbours[v].add(u)
    return SignedGraph(g.n, [sorted(nbrs) for nbrs in neighbours])
