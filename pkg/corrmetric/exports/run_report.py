import json
from fractions import Fraction

import numpy as np

from corrmetric.helpers import ensure_parent_dir


SCHEMA_VERSION = 1

REPORT_COLUMNS = [
    "objective_linf",
    "objective_l1",
    "fractional_cost_max",
    "num_clusters",
    "runtime_ms",
    "seed",
]


class RunReport:
    """
    Summary of one clustering run

    Args:
        algorithm (str): algorithm tag ("round_dense", "round_sparse",
            "round_approx", "pivot"...)
        params (dict): the run parameters (radii, mode, metric, epsilon...)
        objective_linf (float): max disagreements of a vertex
        objective_l1 (float): total disagreements (each edge counted at both
            endpoints)
        fractional_cost_max (Fraction, float, optional): max fractional cost
            of the distances used. Defaults to None.
        num_clusters (int, optional): Defaults to None.
        runtime_ms (float, optional): Defaults to None.
        seed (int, optional): Defaults to None.
        per_vertex (dict, optional): per-vertex arrays (disagreements,
            fractional cost). Defaults to None.

    Attributes:
        same as Args
    """

    def __init__(
        self,
        algorithm,
        params,
        objective_linf,
        objective_l1,
        fractional_cost_max=None,
        num_clusters=None,
        runtime_ms=None,
        seed=None,
        per_vertex=None,
    ) -> None:
        self.algorithm = algorithm
        self.params = dict(params)
        self.objective_linf = objective_linf
        self.objective_l1 = objective_l1
        self.fractional_cost_max = fractional_cost_max
        self.num_clusters = num_clusters
        self.runtime_ms = runtime_ms
        self.seed = seed
        self.per_vertex = per_vertex

    def to_dict(self):
        """JSON-ready dictionary with a stable key order"""
        cost = self.fractional_cost_max
        data = {
            "schema": SCHEMA_VERSION,
            "algorithm": self.algorithm,
            "params": self.params,
            "objective_linf": _plain(self.objective_linf),
            "objective_l1": _plain(self.objective_l1),
            "fractional_cost_max": None if cost is None else float(cost),
            "fractional_cost_max_exact": str(cost) if isinstance(cost, Fraction) else None,
            "num_clusters": self.num_clusters,
            "runtime_ms": self.runtime_ms,
            "seed": self.seed,
        }
        if self.per_vertex is not None:
            data["per_vertex"] = {
                key: [_plain(v) for v in values]
                for key, values in self.per_vertex.items()
            }
        return data

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent)

    def row(self, param_names):
        values = [self.algorithm]
        values += [self.params.get(name) for name in param_names]
        data = self.to_dict()
        values += [data[column] for column in REPORT_COLUMNS]
        return values


def _plain(value):
    if isinstance(value, Fraction):
        return float(value)
    if isinstance(value, np.generic):
        return value.item()
    return value


class RunReports(list):
    """
    A list of corrmetric.RunReport objects, written as CSV rows or JSON

    Args:
        filename (str, optional): the filename (must end with .csv).
            If None, the data will not be exported. Defaults to None.

    Attributes:
        filename (str): the filename
    """

    def __init__(self, *args, filename=None):
        # checks that input is list
        if len(args) == 0:
            super().__init__()
        else:
            if not isinstance(*args, list):
                raise TypeError("corrmetric.RunReports must be a list")
            super().__init__(self._validate_report(item) for item in args[0])
        self.filename = filename

    def __setitem__(self, index, item):
        super().__setitem__(index, self._validate_report(item))

    def insert(self, index, item):
        super().insert(index, self._validate_report(item))

    def append(self, item):
        super().append(self._validate_report(item))

    def extend(self, other):
        if isinstance(other, type(self)):
            super().extend(other)
        else:
            super().extend(self._validate_report(item) for item in other)

    def _validate_report(self, value):
        if isinstance(value, RunReport):
            return value
        raise TypeError("corrmetric.RunReports must be a list of corrmetric.RunReport")

    @property
    def filename(self):
        return self._filename

    @filename.setter
    def filename(self, value):
        if value is not None:
            if not isinstance(value, str):
                raise TypeError("filename must be a string")
            if not value.endswith(".csv"):
                raise ValueError("filename must end with .csv")
        self._filename = value

    def param_names(self):
        """Parameter names in order of first appearance across reports"""
        names = []
        for report in self:
            for name in report.params:
                if name not in names:
                    names.append(name)
        return names

    def make_header(self):
        return ["algorithm"] + self.param_names() + REPORT_COLUMNS

    def rows(self):
        names = self.param_names()
        return [self.make_header()] + [report.row(names) for report in self]

    def write(self):
        if self.filename is not None:
            ensure_parent_dir(self.filename)
            np.savetxt(
                self.filename, np.array(self.rows(), dtype=object), fmt="%s", delimiter=","
            )
        return True

    def to_json(self, indent=2):
        return json.dumps([report.to_dict() for report in self], indent=indent)
