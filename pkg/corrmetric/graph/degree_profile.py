import numpy as np


class PosDegreeProfile:
    """
    Positive degrees of a signed graph, self-loops included

    Args:
        deg_plus (np.ndarray): |N+_u| for every vertex u, counting the
            self-loop

    Attributes:
        deg_plus (np.ndarray): positive degrees (>= 1)
        delta_max (int): the largest positive degree
        n (int): number of vertices
    """

    def __init__(self, deg_plus) -> None:
        deg_plus = np.asarray(deg_plus, dtype=np.int64)
        if deg_plus.size and deg_plus.min() < 1:
            raise ValueError("positive degrees count the self-loop and must be >= 1")
        self.deg_plus = deg_plus
        self.n = len(deg_plus)
        self.delta_max = int(deg_plus.max()) if self.n else 0

    def deg_minus(self, u):
        """|N-_u| = n - |N+_u|"""
        return self.n - int(self.deg_plus[u])

    def __getitem__(self, u):
        return int(self.deg_plus[u])

    def __len__(self):
        return self.n
