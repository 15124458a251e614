from corrmetric.exports.export import Export


class Exports(list):
    """
    A list of corrmetric.Export objects, written in order at the end of a
    run
    """

    def __init__(self, *args):
        items = args[0] if args else []
        if not isinstance(items, list):
            raise TypeError("corrmetric.Exports must be a list")
        super().__init__(self._validate_export(item) for item in items)

    def __setitem__(self, index, item):
        super().__setitem__(index, self._validate_export(item))

    def insert(self, index, item):
        super().insert(index, self._validate_export(item))

    def append(self, item):
        super().append(self._validate_export(item))

    def extend(self, other):
        super().extend([self._validate_export(item) for item in other])

    def _validate_export(self, value):
        if not isinstance(value, Export):
            raise TypeError("corrmetric.Exports must be a list of corrmetric.Export")
        return value

    def write(self, model):
        """Writes every export

        Args:
            model (corrmetric.CorrelationClustering): the finished run
        """
        for export in self:
            export.write(model)
