import numpy as np


class Clustering:
    """
    A partition of the vertices 0..n-1 into labelled clusters

    Args:
        assignment (array-like): cluster id of every vertex; ids must be
            0..k-1, all used
        centers (list, optional): the centre (or pivot) of every cluster.
            Defaults to None.

    Attributes:
        assignment (np.ndarray): cluster id of every vertex
        clusters (list of list): sorted members of every cluster
        centers (list): the centre of every cluster, or None
        n (int): number of vertices
    """

    def __init__(self, assignment, centers=None) -> None:
        self.assignment = np.asarray(assignment, dtype=np.int64)
        self.n = len(self.assignment)
        k = int(self.assignment.max()) + 1 if self.n else 0
        if self.n and self.assignment.min() < 0:
            raise ValueError("cluster ids must be non-negative")
        self.clusters = [[] for _ in range(k)]
        for u, label in enumerate(self.assignment):
            self.clusters[label].append(u)
        for label, members in enumerate(self.clusters):
            if not members:
                raise ValueError(f"cluster {label} is empty")
        if centers is not None:
            if len(centers) != k:
                raise ValueError(f"expected {k} centers, got {len(centers)}")
            for label, center in enumerate(centers):
                if self.assignment[center] != label:
                    raise ValueError(
                        f"center {center} does not belong to cluster {label}"
                    )
        self.centers = centers

    @classmethod
    def from_clusters(cls, clusters, n=None, centers=None):
        """Builds a Clustering from a list of vertex collections

        Args:
            clusters (list): disjoint vertex collections covering 0..n-1
            n (int, optional): number of vertices. If None, the total size
                of the clusters. Defaults to None.
            centers (list, optional): the centre of every cluster.
                Defaults to None.

        Raises:
            ValueError: if the collections don't form a partition
        """
        if n is None:
            n = sum(len(c) for c in clusters)
        assignment = np.full(n, -1, dtype=np.int64)
        for label, members in enumerate(clusters):
            for u in members:
                if u < 0 or u >= n:
                    raise ValueError(f"vertex {u} out of range for n={n}")
                if assignment[u] != -1:
                    raise ValueError(f"vertex {u} appears in two clusters")
                assignment[u] = label
        missing = np.flatnonzero(assignment == -1)
        if len(missing):
            raise ValueError(f"vertex {missing[0]} is not clustered")
        return cls(assignment, centers=centers)

    @property
    def num_clusters(self):
        return len(self.clusters)

    @property
    def sizes(self):
        return [len(c) for c in self.clusters]

    def cluster_of(self, u):
        return int(self.assignment[u])

    def same_cluster(self, u, v):
        return self.assignment[u] == self.assignment[v]

    def canonical(self):
        """Relabels clusters in order of their smallest member"""
        order = sorted(range(self.num_clusters), key=lambda c: self.clusters[c][0])
        relabel = np.empty(self.num_clusters, dtype=np.int64)
        relabel[order] = np.arange(self.num_clusters)
        return Clustering(relabel[self.assignment])

    def same_partition(self, other):
        """True if both clusterings group the vertices identically, whatever
        their labels"""
        return np.array_equal(
            self.canonical().assignment, other.canonical().assignment
        )

    def __eq__(self, other):
        if not isinstance(other, Clustering):
            return NotImplemented
        return np.array_equal(self.assignment, other.assignment)

    def __len__(self):
        return self.num_clusters

    def __iter__(self):
        return iter(self.clusters)

    def __repr__(self):
        return f"Clustering(n={self.n}, clusters={self.num_clusters})"
