import io
import json

import pytest

from qres.cli.main import run
from qres.schemas.graph import DualGraphSchema


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


def _json(capsys, *argv):
    code, out = _run(capsys, *argv)
    assert code == 0, out
    return json.loads(out)


@pytest.fixture
def graph_file(tmp_path):
    def write(graph, name="graph.json"):
        path = tmp_path / name
        path.write_text(DualGraphSchema.from_model(graph).json(), encoding="utf-8")
        return str(path)
    return write


class TestQuotientCommands:
    def test_normalize(self, capsys):
        data = _json(capsys, "normalize", "--type", "10;2,5")
        assert data == {"type": {"d": 1, "a": 0, "b": 0}, "exponents": [5, 2], "normalized": False, "index": 1}

    def test_normalize_two_row(self, capsys):
        data = _json(capsys, "normalize", "--two-row", "2,2;1,1;1,1")
        assert data["type"] == {"d": 2, "a": 1, "b": 1}
        assert data["two_row"] == {"d": [2, 2], "A": [[1, 1], [1, 1]]}
        assert "exponents" not in data

    def test_normalize_two_row_from_file(self, capsys, tmp_path):
        path = tmp_path / "two_row.json"
        path.write_text(json.dumps({"d": [1, 1], "A": [[1, 2], [3, 4]]}), encoding="utf-8")
        data = _json(capsys, "normalize", "--file", str(path))
        assert data["type"] == {"d": 1, "a": 0, "b": 0}

    def test_normalize_type_from_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps({"d": 5, "a": 2, "b": 3})))
        data = _json(capsys, "normalize")
        assert data["normalized"] is True

    def test_normalize_both_inputs(self, capsys):
        code, out = _run(capsys, "normalize", "--type", "5;2,3", "--two-row", "2,2;1,1;1,1")
        assert code == 2
        assert json.loads(out)["error"]["code"] == "input_parse_error"

    def test_hj(self, capsys):
        data = _json(capsys, "hj", "--type", "7;1,3")
        assert data["fraction"] == [3, 2, 2]
        assert data["chain"] == [-3, -2, -2]
        assert data["determinant"] == 7
        assert len(data["steps"]) == 3

    def test_blowup(self, capsys):
        data = _json(capsys, "blowup", "--type", "5;2,3", "--weight", "2,3")
        assert data["e"] == 5
        assert data["exc_self_intersection"] == {"num": -5, "den": 6}
        assert data["chart1_origin"] == {"d": 2, "a": 1, "b": 1}

    def test_domain_error(self, capsys):
        code, out = _run(capsys, "normalize", "--type", "4;2,2")
        assert code == 1
        assert json.loads(out)["error"]["code"] == "non_effective_action"

    def test_bad_weight(self, capsys):
        code, out = _run(capsys, "blowup", "--type", "5;2,3", "--weight", "2,4")
        assert code == 1
        assert json.loads(out)["error"]["code"] == "bad_weight"

    def test_weight_arity(self, capsys):
        code, out = _run(capsys, "blowup", "--type", "5;2,3", "--weight", "2,3,4")
        assert code == 2
        assert json.loads(out)["error"]["code"] == "input_parse_error"

    def test_bad_type_syntax(self):
        with pytest.raises(SystemExit) as exc:
            run(["normalize", "--type", "bad"])
        assert exc.value.code == 2


class TestCurveCommands:
    def test_resolve_curve(self, capsys):
        data = _json(capsys, "resolve", "--curve", "x^3-y^2")
        (divisor,) = [v for v in data["vertices"] if v["kind"] == "exceptional"]
        assert divisor["m"] == {"num": 6, "den": 1}
        assert divisor["self_int"] == {"num": -1, "den": 6}

    def test_resolve_dot(self, capsys):
        code, out = _run(capsys, "resolve", "--curve", "x^3-y^2", "--dot")
        assert code == 0
        assert out.startswith("graph G {")
        assert "e=-1/6" in out

    def test_resolve_from_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps({"curve": "x^3-y^2"})))
        data = _json(capsys, "resolve")
        assert len([v for v in data["vertices"] if v["kind"] == "exceptional"]) == 1

    def test_resolve_monomial_factors(self, capsys, monkeypatch):
        payload = {"factors": [[[1, 3, 0], [-1, 0, 2]]]}
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(payload)))
        data = _json(capsys, "resolve")
        assert len(data["vertices"]) == 2

    def test_intersect(self, capsys, cusps_graph, graph_file):
        data = _json(capsys, "intersect", "--file", graph_file(cusps_graph), "--pair", "1", "2", "--check")
        assert data["value"] == {"num": 4, "den": 1}
        assert data["negative_definite"] is True
        assert data["B"] == [[{"num": 6, "den": 1}, {"num": 4, "den": 1}], [{"num": 4, "den": 1}, {"num": 6, "den": 1}]]
        for row in data["checks"].values():
            assert all(value == {"num": 0, "den": 1} for value in row.values())

    def test_intersect_five_curve(self, capsys, five_curve_graph, graph_file):
        data = _json(capsys, "intersect", "--graph", graph_file(five_curve_graph), "--pair", "1", "2")
        assert data["value"] == {"num": 17, "den": 1}
        assert sorted((att["branch"], att.get("k"), att["d"]) for att in data["attachments"]) == [
            (1, 2, 1), (2, 2, 2), (3, 1, 1), (4, 1, 3), (5, 1, 2)
        ]

    def test_intersect_without_divisors(self, capsys, tmp_path):
        graph = _json(capsys, "resolve", "--curve", "x*y", "--ambient", "2;1,1")
        assert not [v for v in graph["vertices"] if v["kind"] == "exceptional"]
        path = tmp_path / "axes.json"
        path.write_text(json.dumps(graph), encoding="utf-8")
        data = _json(capsys, "intersect", "--file", str(path), "--pair", "1", "2", "--check")
        assert data["value"] == {"num": 1, "den": 2}
        assert data["A"] == [] and data["B"] == []
        assert data["negative_definite"] is None

    def test_intersect_missing_file(self, capsys, tmp_path):
        code, out = _run(capsys, "intersect", "--file", str(tmp_path / "missing.json"))
        assert code == 2
        assert json.loads(out)["error"]["code"] == "input_parse_error"

    def test_intersect_invalid_json(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        code, _ = _run(capsys, "intersect", "--file", str(path))
        assert code == 2

    def test_refine(self, capsys, five_curve_graph, graph_file):
        data = _json(capsys, "refine", "--graph", graph_file(five_curve_graph))
        self_ints = {v["id"]: v["self_int"] for v in data["vertices"] if v["kind"] == "exceptional"}
        assert self_ints[1] == {"num": -2, "den": 1}
        assert self_ints[2] == {"num": -1, "den": 1}


class TestProjectiveCommands:
    def test_bezout_degrees(self, capsys):
        data = _json(capsys, "bezout", "--w", "2,3,5", "--deg1", "6", "--deg2", "10")
        assert data["value"] == {"num": 2, "den": 1}
        assert data["deg_tau"] == 30
        assert (data["e"], data["dpqr"]) == (1, 30)

    def test_bezout_polynomials(self, capsys):
        data = _json(capsys, "bezout", "--w", "2,3,5", "--poly1", "x^3+y^2", "--poly2", "x^5+z^2")
        assert data["degrees"] == [6, 10]
        assert data["value"] == {"num": 2, "den": 1}

    def test_bezout_conflicting_input(self, capsys):
        code, _ = _run(capsys, "bezout", "--w", "2,3,5", "--deg1", "6", "--poly1", "x^3", "--deg2", "1")
        assert code == 2

    def test_bezout_from_file(self, capsys, tmp_path):
        path = tmp_path / "bezout.json"
        path.write_text(json.dumps({"w": [1, 1, 1], "action": [3, 0, 1, 2], "deg1": 1, "deg2": 1}), encoding="utf-8")
        data = _json(capsys, "bezout", "--file", str(path))
        assert data["value"] == {"num": 1, "den": 3}
        assert data["deg_tau"] == 3


class TestJungCommand:
    def test_curve(self, capsys):
        data = _json(capsys, "jung", "--n", "3", "--curve", "(x^2+y^3)(x^3+y^2)")
        assert data["kind"] == "abstract"
        assert [v["self_int"] for v in data["vertices"]] == [{"num": -1, "den": 10}] * 2

    def test_graph_file(self, capsys, cusps_graph, graph_file):
        data = _json(capsys, "jung", "--n", "20", "--graph", graph_file(cusps_graph))
        assert [v["genus"] for v in data["vertices"]] == [2, 2]

    def test_bad_degree(self, capsys):
        code, _ = _run(capsys, "jung", "--n", "0", "--curve", "x^3-y^2")
        assert code == 2
