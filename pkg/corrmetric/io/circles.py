import warnings


class Circle:
    """
    A ground-truth circle

    Args:
        label (str): the circle name
        members (iterable of int): external ids of its members

    Attributes:
        label (str): the circle name
        members (frozenset): external ids of its members
    """

    def __init__(self, label, members) -> None:
        self.label = label
        self.members = frozenset(members)

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        return f"Circle({self.label!r}, {len(self)} members)"


class CircleSet(list):
    """
    A list of corrmetric.Circle objects in external-id space. Circles may
    overlap and need not cover every vertex.

    Args:
        id_map (dict, optional): external id -> internal id of the graph
            the circles refer to. Defaults to None (identity).

    Attributes:
        id_map (dict): external id -> internal id
        dropped (int): number of members dropped at parsing because they
            are absent from the graph
    """

    def __init__(self, *args, id_map=None, dropped=0):
        # checks that input is list
        if len(args) == 0:
            super().__init__()
        else:
            if not isinstance(*args, list):
                raise TypeError("corrmetric.CircleSet must be a list")
            super().__init__(self._validate_circle(item) for item in args[0])
        self.id_map = id_map
        self.dropped = dropped

    def __setitem__(self, index, item):
        super().__setitem__(index, self._validate_circle(item))

    def insert(self, index, item):
        super().insert(index, self._validate_circle(item))

    def append(self, item):
        super().append(self._validate_circle(item))

    def extend(self, other):
        if isinstance(other, type(self)):
            super().extend(other)
        else:
            super().extend(self._validate_circle(item) for item in other)

    def _validate_circle(self, value):
        if isinstance(value, Circle):
            return value
        raise TypeError("corrmetric.CircleSet must be a list of corrmetric.Circle")

    def internal_members(self, circle):
        """Members of circle as internal vertex ids"""
        if self.id_map is None:
            return set(circle.members)
        return {self.id_map[m] for m in circle.members if m in self.id_map}

    @property
    def labels(self):
        return [circle.label for circle in self]


def parse_circles(stream, id_map=None):
    """Reads ground-truth circles, one per line: a label then the external
    ids of the members, whitespace separated.

    Members absent from id_map are dropped and counted in a single warning.

    Args:
        stream (iterable of str, str): the lines, e.g. an open file
        id_map (dict, optional): external id -> internal id of the graph.
            Defaults to None (no filtering).

    Raises:
        ValueError: if a member id is not an integer (the message gives
            the line number)

    Returns:
        CircleSet: the circles
    """
    lines = stream.splitlines() if isinstance(stream, str) else stream
    circles = CircleSet(id_map=id_map)
    dropped = 0
    for line_number, line in enumerate(lines, start=1):
        tokens = line.split()
        if not tokens or tokens[0].startswith("#"):
            continue
        label, members = tokens[0], tokens[1:]
        try:
            members = [int(token) for token in members]
        except ValueError:
            raise ValueError(
                f"line {line_number}: circle members must be integers, got {line.strip()!r}"
            )
        if id_map is not None:
            kept = [m for m in members if m in id_map]
            dropped += len(members) - len(kept)
            members = kept
        circles.append(Circle(label, members))
    if dropped:
        warnings.warn(
            f"{dropped} circle members are not in the graph and were dropped",
            UserWarning,
        )
    circles.dropped = dropped
    return circles


def load_circles(filename, id_map=None):
    """Reads a circles file, see parse_circles"""
    with open(filename, "r") as f:
        return parse_circles(f, id_map)


class ClusterContainment:
    """
    How much of an output cluster lies in its best ground-truth circle

    Attributes:
        cluster (int): the cluster id
        size (int): the cluster size
        best_label (str): label of the circle with the largest overlap, or
            None without circles
        fraction (float): overlap / size
    """

    def __init__(self, cluster, size, best_label, fraction) -> None:
        self.cluster = cluster
        self.size = size
        self.best_label = best_label
        self.fraction = fraction

    def as_row(self):
        return [self.cluster, self.size, self.best_label, self.fraction]

    def __repr__(self):
        return (
            f"ClusterContainment(cluster={self.cluster}, size={self.size}, "
            f"best_label={self.best_label!r}, fraction={self.fraction})"
        )


def circle_containment_report(clustering, circles, min_size=10):
    """For every cluster of at least min_size vertices, finds the circle
    containing most of it (ties go to the smallest label)

    Args:
        clustering (corrmetric.Clustering): the clustering
        circles (CircleSet): the ground truth
        min_size (int, optional): smallest cluster reported. Defaults to 10.

    Returns:
        list of ClusterContainment: one entry per large cluster
    """
    internal = [(c.label, circles.internal_members(c)) for c in circles]
    report = []
    for label, members in enumerate(clustering.clusters):
        if len(members) < min_size:
            continue
        best_label, best_overlap = None, -1
        for circle_label, circle_members in internal:
            overlap = sum(1 for u in members if u in circle_members)
            if overlap > best_overlap or (
                overlap == best_overlap and circle_label < best_label
            ):
                best_label, best_overlap = circle_label, overlap
        fraction = max(best_overlap, 0) / len(members)
        report.append(ClusterContainment(label, len(members), best_label, fraction))
    return report
