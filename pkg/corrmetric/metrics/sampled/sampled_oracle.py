import numpy as np

from corrmetric.metrics.distance_oracle import DistanceOracle, SAMPLED
from corrmetric.metrics.sampled.estimators import initial_estimate_table
from corrmetric.metrics.sampled.neighborhood_samples import draw_samples
from corrmetric.metrics.sampled.constant_ladder import ConstantLadder


class SampledOracle(DistanceOracle):
    """
    Post-processed sampled estimates of the correlation metric, stored as a
    dense float table

    Args:
        graph (corrmetric.SignedGraph): the graph
        table (np.ndarray): n x n symmetric table with a zero diagonal
        ladder (corrmetric.ConstantLadder, optional): the constants used for
            post-processing. Defaults to None.

    Attributes:
        table (np.ndarray): the estimates
        ladder (corrmetric.ConstantLadder): the constants used
    """

    def __init__(self, graph, table, ladder=None) -> None:
        super().__init__(graph, SAMPLED)
        self.table = table
        self.ladder = ladder

    def _query(self, u, v):
        return float(self.table[u, v])

    def ball(self, u, radius):
        radius = self.as_radius(radius)
        inside = self.table[u] <= radius
        inside[u] = False
        vertices = np.flatnonzero(inside)
        return vertices, list(self.table[u, vertices])

    def stored_pairs(self):
        for u in range(self.n):
            for v in range(u + 1, self.n):
                yield u, v, float(self.table[u, v])

    def to_dense_array(self):
        return self.table.copy()


def post_process(g, initial_table, ladder):
    """Snaps the initial estimates towards the graph's signs

    Positive edges with an estimate <= t_low become 0, negative edges with
    an estimate >= t_high become 1, every other estimate is kept.

    Args:
        g (corrmetric.SignedGraph): the graph
        initial_table (np.ndarray): n x n initial estimates
        ladder (corrmetric.ConstantLadder): the constants

    Returns:
        SampledOracle: the post-processed oracle
    """
    positive = g.adjacency_matrix(self_loops=True, dtype=bool).toarray()
    table = np.array(initial_table, dtype=float, copy=True)
    t_low, t_high = float(ladder.t_low), float(ladder.t_high)
    table[positive & (table <= t_low)] = 0.0
    table[~positive & (table >= t_high)] = 1.0
    np.fill_diagonal(table, 0.0)
    return SampledOracle(g, table, ladder)


def build_sampled_oracle(g, config, ladder=None, settings=None):
    """Runs the sampling pipeline: samples, initial estimates and
    post-processing

    Args:
        g (corrmetric.SignedGraph): the graph
        config (corrmetric.SampleConfig): sampling parameters
        ladder (corrmetric.ConstantLadder, optional): constants used for
            post-processing. If None, the ladder of config.epsilon is used.
            Defaults to None.
        settings (corrmetric.Settings, optional): capacity settings.
            Defaults to None.

    Returns:
        SampledOracle: the oracle
    """
    if ladder is None:
        ladder = ConstantLadder(config.epsilon)
    samples = draw_samples(g, config)
    table = initial_estimate_table(g, samples, settings)
    return post_process(g, table, ladder)
