class Export:
    """
    Base class of the outputs written at the end of a run

    Args:
        field (str, optional): what is exported ("metric", "clustering",
            "report"). Defaults to None.
    """

    def __init__(self, field=None) -> None:
        self.field = field

    def write(self, model):
        """Writes the export from a corrmetric.CorrelationClustering run"""
        raise NotImplementedError
