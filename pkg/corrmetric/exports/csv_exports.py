import numpy as np

from corrmetric.exports.export import Export
from corrmetric.helpers import ensure_parent_dir
from corrmetric.io.edge_list import write_clustering


class CSVExport(Export):
    """
    Args:
        field (str): what is exported
        filename (str): the filename (must end with .csv)

    Attributes:
        filename (str): the filename
    """

    def __init__(self, field, filename) -> None:
        super().__init__(field=field)
        self.filename = filename

    @property
    def filename(self):
        return self._filename

    @filename.setter
    def filename(self, value):
        if not isinstance(value, str):
            raise TypeError("filename must be a string")
        if not value.endswith(".csv"):
            raise ValueError("filename must end with .csv")
        self._filename = value


class MetricCSVExport(CSVExport):
    """
    Dumps the distances of an oracle: "u,v,num,den" rows for exact oracles
    (stored pairs of sparse oracles, all pairs u < v of dense ones) and
    "u,v,value" rows for sampled oracles.

    Args:
        filename (str): the filename (must end with .csv)
    """

    def __init__(self, filename) -> None:
        super().__init__(field="metric", filename=filename)

    def write(self, model):
        write_metric(model.oracle, self.filename, model.external_ids)


class ClusteringCSVExport(CSVExport):
    """
    Writes the cluster of every vertex as "vertex,cluster" rows

    Args:
        filename (str): the filename (must end with .csv)
    """

    def __init__(self, filename) -> None:
        super().__init__(field="clustering", filename=filename)

    def write(self, model):
        write_clustering(model.clustering, self.filename, model.external_ids)


def write_metric(oracle, filename, external_ids=None):
    """Writes the distances of an oracle to a CSV file

    Args:
        oracle (corrmetric.DistanceOracle): the distances
        filename (str): the output file
        external_ids (list, optional): external id of every vertex.
            Defaults to None.
    """
    ids = np.arange(oracle.n) if external_ids is None else np.asarray(external_ids)
    if oracle.is_exact:
        header = "u,v,num,den"
        rows = [
            [ids[u], ids[v], d.numerator, d.denominator]
            for u, v, d in oracle.stored_pairs()
        ]
        fmt = "%d"
        data = np.array(rows, dtype=np.int64).reshape(-1, 4)
    else:
        header = "u,v,value"
        rows = [[ids[u], ids[v], d] for u, v, d in oracle.stored_pairs()]
        fmt = ["%d", "%d", "%.17g"]
        data = np.array(rows, dtype=float).reshape(-1, 3)
    ensure_parent_dir(filename)
    np.savetxt(filename, data, fmt=fmt, delimiter=",", header=header, comments="")
