class Settings:
    """
    Args:
        dense_max_vertices (int, optional): largest vertex count for which
            dense n x n tables (count matrix, dense and sampled oracles) are
            built. Defaults to 8000.
        brute_force_max_vertices (int, optional): largest vertex count
            accepted by the brute-force optimum. Defaults to 12.
        exact_fractional_cost (bool, optional): if True, the fractional
            cost of exact oracles is computed over exact rationals, else
            with floats. Defaults to True.

    Attributes:
        dense_max_vertices (int): capacity of dense tables
        brute_force_max_vertices (int): capacity of the brute-force optimum
        exact_fractional_cost (bool): exact fractional cost for exact
            oracles
    """

    def __init__(
        self,
        dense_max_vertices=8000,
        brute_force_max_vertices=12,
        exact_fractional_cost=True,
    ):
        self.dense_max_vertices = dense_max_vertices
        self.brute_force_max_vertices = brute_force_max_vertices
        self.exact_fractional_cost = exact_fractional_cost

    @property
    def dense_max_vertices(self):
        return self._dense_max_vertices

    @dense_max_vertices.setter
    def dense_max_vertices(self, value):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError("dense_max_vertices should be an int")
        if value < 1:
            raise ValueError("dense_max_vertices should be positive")
        self._dense_max_vertices = value

    @property
    def brute_force_max_vertices(self):
        return self._brute_force_max_vertices

    @brute_force_max_vertices.setter
    def brute_force_max_vertices(self, value):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError("brute_force_max_vertices should be an int")
        if value < 1:
            raise ValueError("brute_force_max_vertices should be positive")
        self._brute_force_max_vertices = value

    @property
    def exact_fractional_cost(self):
        return self._exact_fractional_cost

    @exact_fractional_cost.setter
    def exact_fractional_cost(self, value):
        if not isinstance(value, bool):
            raise TypeError("exact_fractional_cost should be a bool")
        self._exact_fractional_cost = value


DEFAULT_SETTINGS = Settings()
