import corrmetric as C
import pytest


class TestExports:
    exports = C.Exports([C.MetricCSVExport("m.csv")])

    def test_set_item(self):
        self.exports[0] = C.ClusteringCSVExport("c.csv")
        with pytest.raises(TypeError, match="list of corrmetric.Export"):
            self.exports[0] = 2

    def test_append(self):
        self.exports.append(C.MetricCSVExport("m.csv"))
        with pytest.raises(TypeError):
            self.exports.append("export")

    def test_insert(self):
        with pytest.raises(TypeError):
            self.exports.insert(0, 1.5)

    def test_extend(self):
        self.exports.extend(C.Exports([C.MetricCSVExport("n.csv")]))
        with pytest.raises(TypeError):
            self.exports.extend([None])

    def test_must_be_a_list(self):
        with pytest.raises(TypeError, match="must be a list"):
            C.Exports(C.MetricCSVExport("m.csv"))


def test_base_export_is_abstract():
    with pytest.raises(NotImplementedError):
        C.Export(field="metric").write(None)


def test_write_calls_every_export():
    written = []

    class Recorder(C.Export):
        def write(self, model):
            written.append((self.field, model))

    exports = C.Exports([Recorder("a"), Recorder("b")])
    exports.write("model")
    assert written == [("a", "model"), ("b", "model")]
