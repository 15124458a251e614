import numpy as np
from scipy.sparse import csr_matrix


class NeighborhoodSamples:
    """
    Per-vertex samples drawn without replacement from the positive
    neighbourhoods (self-loop included)

    Args:
        samples (list of np.ndarray): sorted sample S_u of every vertex
        exact_flag (np.ndarray): True where deg_plus[u] < m, i.e. S_u is
            the whole neighbourhood
        m (int): the sample size m(n)
        config (corrmetric.SampleConfig): the configuration used

    Attributes:
        samples (list of np.ndarray): sorted sample of every vertex
        exact_flag (np.ndarray): exact fallback flags
        m (int): the sample size
        config (corrmetric.SampleConfig): the configuration used
        scale (np.ndarray): deg_plus[u] / |S_u| for every vertex
    """

    def __init__(self, samples, exact_flag, m, config, deg_plus) -> None:
        self.samples = samples
        self.exact_flag = np.asarray(exact_flag, dtype=bool)
        self.m = m
        self.config = config
        sizes = np.array([len(s) for s in samples], dtype=np.int64)
        self.scale = np.asarray(deg_plus, dtype=float) / sizes

    def __len__(self):
        return len(self.samples)

    def __getitem__(self, u):
        return self.samples[u]

    def indicator_matrix(self):
        """Sparse 0/1 matrix S with S[u, w] = 1 iff w is in S_u"""
        n = len(self.samples)
        lengths = [len(s) for s in self.samples]
        rows = np.repeat(np.arange(n), lengths)
        cols = np.concatenate(self.samples) if n else np.array([], dtype=np.int64)
        data = np.ones(len(cols), dtype=np.float64)
        return csr_matrix((data, (rows, cols)), shape=(n, n))


def draw_samples(g, config):
    """Draws S_u for every vertex: min(m(n), deg_plus[u]) distinct vertices
    uniformly from N+_u.

    Vertices with deg_plus[u] < m(n) keep their whole neighbourhood and
    consume no randomness.

    Args:
        g (corrmetric.SignedGraph): the graph
        config (corrmetric.SampleConfig): sampling parameters

    Returns:
        NeighborhoodSamples: the samples
    """
    m = config.m(g.n)
    rng = config.make_rng()
    samples = []
    exact_flag = np.zeros(g.n, dtype=bool)
    for u in range(g.n):
        population = np.asarray(g.positive_neighborhood_with_self(u), dtype=np.int64)
        if len(population) < m:
            exact_flag[u] = True
            samples.append(population)
        else:
            chosen = rng.choice(population, size=m, replace=False)
            samples.append(np.sort(chosen))
    return NeighborhoodSamples(samples, exact_flag, m, config, g.deg_plus)
