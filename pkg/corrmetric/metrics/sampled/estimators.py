import numpy as np

from corrmetric.metrics.dense_oracle import check_dense_capacity


def estimate_W_Y(g, samples, u, v):
    """Estimates |N+_u & N+_v| (W) and |N+_u & N-_v| (Y) from u's sample

    Args:
        g (corrmetric.SignedGraph): the graph
        samples (corrmetric.NeighborhoodSamples): the samples
        u (int): the vertex whose sample is used
        v (int): the other vertex

    Returns:
        tuple: (W, Y), with W + Y = deg_plus[u]
    """
    if u == v:
        raise ValueError("estimates are only defined for distinct vertices")
    deg_u = float(g.deg_plus[u])
    neighbours_v = g.positive_set_with_self(v)
    hits = sum(1 for w in samples[u] if int(w) in neighbours_v)
    W = samples.scale[u] * hits
    return W, deg_u - W


def initial_estimate(g, samples, u, v):
    """Initial estimate of d(u, v)

    The pair is labelled so that deg_plus[v] >= deg_plus[u], the smaller id
    playing u on ties, and the estimate is
    (Y(u, v) + Y(v, u)) / (deg_plus[u] + Y(v, u)).

    Args:
        g (corrmetric.SignedGraph): the graph
        samples (corrmetric.NeighborhoodSamples): the samples
        u (int): first vertex
        v (int): second vertex

    Returns:
        float: the estimate, in [0, 1]
    """
    if u == v:
        raise ValueError("estimates are only defined for distinct vertices")
    u, v = _label(g.deg_plus, u, v)
    _, y_uv = estimate_W_Y(g, samples, u, v)
    _, y_vu = estimate_W_Y(g, samples, v, u)
    return (y_uv + y_vu) / (g.deg_plus[u] + y_vu)


def _label(deg_plus, u, v):
    if deg_plus[u] < deg_plus[v] or (deg_plus[u] == deg_plus[v] and u < v):
        return u, v
    return v, u


def estimate_tables(g, samples, settings=None):
    """W and Y estimates for every ordered pair

    hits[u, v] = |S_u & N+_v| is the sparse product S (A + I).

    Args:
        g (corrmetric.SignedGraph): the graph
        samples (corrmetric.NeighborhoodSamples): the samples
        settings (corrmetric.Settings, optional): capacity settings.
            Defaults to None.

    Returns:
        tuple of np.ndarray: the n x n tables W and Y
    """
    check_dense_capacity(g.n, settings)
    adjacency = g.adjacency_matrix(self_loops=True, dtype=np.float64)
    hits = (samples.indicator_matrix() @ adjacency).toarray()
    W = samples.scale[:, None] * hits
    Y = g.deg_plus.astype(float)[:, None] - W
    return W, Y


def initial_estimate_table(g, samples, settings=None):
    """The initial estimate for every pair as an n x n float table, zero on
    the diagonal (vectorised initial_estimate)"""
    _, Y = estimate_tables(g, samples, settings)
    deg = g.deg_plus.astype(np.int64)
    n = g.n
    ids = np.arange(n)
    # u_first[i, j]: i plays the role of u in the pair {i, j}
    u_first = (deg[:, None] < deg[None, :]) | (
        (deg[:, None] == deg[None, :]) & (ids[:, None] < ids[None, :])
    )
    numerator = Y + Y.T
    denominator = np.where(
        u_first,
        deg[:, None] + Y.T,
        deg[None, :] + Y,
    )
    table = numerator / denominator
    np.fill_diagonal(table, 0.0)
    return table
