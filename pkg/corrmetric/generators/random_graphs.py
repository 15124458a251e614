import numpy as np

from corrmetric.graph.signed_graph import SignedGraph


def random_signed_gnp(n, p, seed=0):
    """Signed graph with every pair positive independently with
    probability p

    Args:
        n (int): number of vertices
        p (float): positive-edge probability, in [0, 1]
        seed (int, optional): seed of the numpy generator. Defaults to 0.

    Returns:
        corrmetric.SignedGraph: the graph
    """
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    us, vs = np.triu_indices(n, k=1)
    keep = rng.random(len(us)) < p
    return SignedGraph.from_edges(n, zip(us[keep], vs[keep]))


def random_bounded_degree(n, max_degree, seed=0):
    """Sparse signed graph made of the union of max_degree random
    matchings, so every positive degree (self-loop excluded) is at most
    max_degree

    Args:
        n (int): number of vertices
        max_degree (int): bound on the positive degree without self-loop
        seed (int, optional): seed of the numpy generator. Defaults to 0.

    Returns:
        corrmetric.SignedGraph: the graph
    """
    rng = np.random.default_rng(seed)
    edges = []
    for _ in range(max_degree):
        order = rng.permutation(n)
        edges.extend(zip(order[0::2], order[1::2]))
    return SignedGraph.from_edges(n, edges)
