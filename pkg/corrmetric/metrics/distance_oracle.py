import numpy as np

from corrmetric.helpers import as_fraction


DENSE_EXACT = "dense-exact"
SPARSE_EXACT = "sparse-exact"
SAMPLED = "sampled"


class DistanceOracle:
    """
    Base class for correlation metric lookups d(u, v) in [0, 1]

    Exact oracles answer with fractions.Fraction values, sampled oracles
    with floats.

    Args:
        graph (corrmetric.SignedGraph): the graph the metric was computed on
        kind (str): "dense-exact", "sparse-exact" or "sampled"

    Attributes:
        graph (corrmetric.SignedGraph): the graph the metric was computed on
        kind (str): the kind of oracle
        n (int): number of vertices
    """

    def __init__(self, graph, kind) -> None:
        if kind not in [DENSE_EXACT, SPARSE_EXACT, SAMPLED]:
            raise ValueError(f"unknown oracle kind {kind}")
        self.graph = graph
        self.kind = kind
        self.n = graph.n

    @property
    def is_exact(self):
        return self.kind in [DENSE_EXACT, SPARSE_EXACT]

    def _check_pair(self, u, v):
        for vertex in (u, v):
            if vertex < 0 or vertex >= self.n:
                raise ValueError(f"vertex {vertex} out of range for n={self.n}")
        if u == v:
            raise ValueError("distances are only defined for distinct vertices")

    def query(self, u, v):
        """Returns d(u, v) for distinct vertices u and v"""
        self._check_pair(u, v)
        return self._query(u, v)

    def _query(self, u, v):
        raise NotImplementedError

    def edge_adjusted(self, u, v):
        """Edge-adjusted distance: d(u, v) on positive edges, 1 - d(u, v)
        on negative ones"""
        d = self.query(u, v)
        if self.graph.is_positive(u, v):
            return d
        return 1 - d

    def as_radius(self, radius):
        """Converts a radius to the number type the oracle compares with"""
        if self.is_exact:
            return as_fraction(radius)
        return float(radius)

    def ball(self, u, radius):
        """Vertices v != u with d(u, v) <= radius

        Args:
            u (int): the centre
            radius (float, Fraction): the radius

        Returns:
            tuple: sorted vertex array and the list of their distances to u
        """
        raise NotImplementedError

    def stored_pairs(self):
        """Iterates over (u, v, d(u, v)) with u < v for every pair the oracle
        stores explicitly"""
        raise NotImplementedError

    def to_dense_array(self):
        """Full n x n float table of distances with a zero diagonal"""
        table = np.ones((self.n, self.n))
        for u, v, d in self.stored_pairs():
            table[u, v] = table[v, u] = float(d)
        np.fill_diagonal(table, 0.0)
        return table

    def triangle_violations(self):
        """Counts the triples of distinct vertices with
        d(u, v) > d(u, w) + d(w, v).

        Exact oracles compare by integer cross-multiplication, sampled
        oracles in floating point.

        Returns:
            int: the number of violated (pair, third vertex) combinations
        """
        if not self.is_exact:
            return count_violations(self.to_dense_array())

        nums, dens = self.numerator_denominator_tables()
        violations = 0
        for u in range(self.n):
            # lhs[v, w] = N_uv * D_uw * D_vw, rhs[v, w] = D_uv * (N_uw D_vw + N_vw D_uw)
            lhs = nums[u][:, None] * dens[u][None, :] * dens
            rhs = dens[u][:, None] * (
                nums[u][None, :] * dens + nums * dens[u][None, :]
            )
            bad = lhs > rhs
            bad[:, u] = False
            bad[u, :] = False
            np.fill_diagonal(bad, False)
            # only pairs u < v
            bad[: u + 1, :] = False
            violations += int(np.count_nonzero(bad))
        return violations

    def numerator_denominator_tables(self):
        """Dense integer tables of numerators and denominators of the
        metric (diagonal 0/1, implicit pairs 1/1)"""
        nums = np.ones((self.n, self.n), dtype=np.int64)
        dens = np.ones((self.n, self.n), dtype=np.int64)
        for u, v, d in self.stored_pairs():
            nums[u, v] = nums[v, u] = d.numerator
            dens[u, v] = dens[v, u] = d.denominator
        np.fill_diagonal(nums, 0)
        return nums, dens

    def approx_triangle_fraction(self, c, h, num_triples=100000, seed=0):
        """Fraction of uniformly drawn triples satisfying
        d(u, v) <= c (d(u, w) + d(w, v)) + h, see approx_triangle_fraction"""
        return approx_triangle_fraction(
            self.to_dense_array(), c, h, num_triples=num_triples, seed=seed
        )

    def __repr__(self):
        return f"{type(self).__name__}(kind={self.kind}, n={self.n})"


def count_violations(table, c=1.0, h=0.0):
    """Counts triples (u < v, w distinct) of a float distance table with
    table[u, v] > c * (table[u, w] + table[w, v]) + h"""
    n = len(table)
    violations = 0
    for u in range(n):
        bad = table[u][:, None] > c * (table[u][None, :] + table) + h
        bad[:, u] = False
        np.fill_diagonal(bad, False)
        bad[: u + 1, :] = False
        violations += int(np.count_nonzero(bad))
    return violations


def approx_triangle_fraction(table, c, h, num_triples=100000, seed=0):
    """Fraction of random triples of distinct vertices satisfying the
    (c, h)-approximate triangle inequality table[u, v] <= c (table[u, w] +
    table[w, v]) + h

    Args:
        table (np.ndarray): n x n distance table, n >= 3
        c (float): multiplicative constant
        h (float): additive constant
        num_triples (int, optional): number of triples drawn. Defaults to
            100000.
        seed (int, optional): seed of the generator. Defaults to 0.

    Returns:
        float: the fraction of satisfied triples
    """
    table = np.asarray(table, dtype=float)
    n = len(table)
    if n < 3:
        raise ValueError("at least 3 vertices are needed to draw triples")
    rng = np.random.default_rng(seed)
    # distinct triples: draw u, then shift v and w past the earlier picks
    u = rng.integers(0, n, size=num_triples)
    v = rng.integers(0, n - 1, size=num_triples)
    v = v + (v >= u)
    w = rng.integers(0, n - 2, size=num_triples)
    low, high = np.minimum(u, v), np.maximum(u, v)
    w = w + (w >= low)
    w = w + (w >= high)
    holds = table[u, v] <= c * (table[u, w] + table[w, v]) + h
    return float(np.count_nonzero(holds)) / num_triples
