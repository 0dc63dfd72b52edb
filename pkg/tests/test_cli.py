import json

import pytest

from jacgraph.cli import main

BANANA = {
    "vertices": ["u", "v"],
    "edges": [{"endpoints": ["u", "v"]}, {"endpoints": ["u", "v"]}],
    "polarization": {"u": 1, "v": 0},
    "basepoint": "u",
}


@pytest.fixture
def problem(tmp_path):
    def write(data):
        path = tmp_path / "problem.json"
        path.write_text(json.dumps(data))
        return str(path)

    return write


def run(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr()
    payload = json.loads(out.out) if out.out.strip() else None
    return rc, payload, out.err


class TestComplexity:
    def test_banana(self, problem, capsys):
        rc, payload, _ = run(capsys, ["complexity", problem(BANANA)])
        assert rc == 0
        assert payload == {"complexity": 2, "picard": [2]}

    def test_disconnected_graph_reports_zero(self, problem, capsys):
        data = {"vertices": ["a", "b"], "edges": []}
        rc, payload, _ = run(capsys, ["complexity", problem(data)])
        assert rc == 0
        assert payload["complexity"] == 0
        assert payload["picard"] is None
        assert "picard_error" in payload


class TestEnum:
    def test_quasistable_default(self, problem, capsys):
        rc, payload, _ = run(capsys, ["enum", problem(BANANA)])
        assert rc == 0
        assert payload["kind"] == "quasistable"
        assert payload["vertices"] == ["u", "v"]
        assert payload["multidegrees"] == [[1, 0], [2, -1]]
        assert payload["count"] == 2

    def test_kinds(self, problem, capsys):
        path = problem(BANANA)
        _, ss, _ = run(capsys, ["enum", path, "--kind", "ss"])
        _, st, _ = run(capsys, ["enum", path, "--kind", "stable"])
        assert ss["multidegrees"] == [[0, 1], [1, 0], [2, -1]]
        assert st["multidegrees"] == [[1, 0]]

    def test_stratum_flag_overrides(self, problem, capsys):
        data = dict(BANANA, stratum=["e0", "e1"])
        rc, payload, _ = run(
            capsys, ["enum", problem(data), "--stratum", "e0"]
        )
        assert rc == 0
        assert payload["multidegrees"] == [[1, -1]]

    def test_basepoint_flag(self, problem, capsys):
        rc, payload, _ = run(capsys, ["enum", problem(BANANA), "--basepoint", "v"])
        assert rc == 0
        assert payload["multidegrees"] == [[0, 1], [1, 0]]

    def test_verbose_summary_on_stderr(self, problem, capsys):
        rc, _, err = run(capsys, ["enum", problem(BANANA), "--verbose"])
        assert rc == 0
        assert "2 quasistable multidegrees" in err

    def test_polarization_required(self, problem, capsys):
        data = {"vertices": ["a"], "edges": []}
        rc, _, err = run(capsys, ["enum", problem(data)])
        assert rc == 2
        assert "polarization" in err


class TestReduce:
    def test_banana(self, problem, capsys):
        rc, payload, _ = run(
            capsys, ["reduce", problem(BANANA), "--multidegree", "0,1"]
        )
        assert rc == 0
        assert payload["input"] == [0, 1]
        assert payload["output"] == [2, -1]
        assert payload["steps"] == 1
        assert payload["class_checked"] is True

    def test_wrong_arity(self, problem, capsys):
        rc, _, err = run(capsys, ["reduce", problem(BANANA), "--multidegree", "1"])
        assert rc == 2
        assert "2 integers" in err

    def test_non_integer_values(self, problem, capsys):
        rc, _, _ = run(capsys, ["reduce", problem(BANANA), "--multidegree", "a,b"])
        assert rc == 2

    def test_disconnected_stratum_is_domain_error(self, problem, capsys):
        rc, _, err = run(
            capsys,
            [
                "reduce",
                problem(BANANA),
                "--stratum",
                "e0,e1",
                "--multidegree",
                "0,-1",
            ],
        )
        assert rc == 3
        assert "connected" in err


class TestCheckPol:
    def test_degenerate(self, problem, capsys):
        rc, payload, _ = run(capsys, ["check-pol", problem(BANANA)])
        assert rc == 0
        assert payload == {
            "general": False,
            "nondegenerate": False,
            "witness": {"vertices": ["u"], "is_spine": False},
        }

    def test_general(self, problem, capsys):
        data = dict(BANANA, polarization={"u": "1/2", "v": "1/2"})
        rc, payload, _ = run(capsys, ["check-pol", problem(data)])
        assert rc == 0
        assert payload["general"] is True
        assert payload["witness"] is None


class TestStrata:
    def test_banana_report(self, problem, capsys):
        rc, payload, _ = run(capsys, ["strata", problem(BANANA)])
        assert rc == 0
        assert payload["complete"] is True
        assert payload["total_multidegrees"] == 4
        assert payload["subdivided_complexity"] == 4
        assert [r["stratum"] for r in payload["rows"]] == [
            [],
            ["e0"],
            ["e1"],
            ["e0", "e1"],
        ]
        assert [len(r["multidegrees"]) for r in payload["rows"]] == [2, 1, 1, 0]

    def test_max_codim(self, problem, capsys):
        rc, payload, _ = run(
            capsys, ["strata", problem(BANANA), "--max-codim", "1"]
        )
        assert rc == 0
        assert payload["complete"] is False
        assert len(payload["rows"]) == 3

    def test_guard_env(self, problem, capsys, monkeypatch):
        monkeypatch.setenv("JACGRAPH_GUARD_EDGES", "1")
        rc, _, err = run(capsys, ["strata", problem(BANANA)])
        assert rc == 3
        assert "JACGRAPH_GUARD_EDGES" in err

    def test_guard_env_validated(self, problem, capsys, monkeypatch):
        monkeypatch.setenv("JACGRAPH_GUARD_EDGES", "lots")
        rc, _, _ = run(capsys, ["strata", problem(BANANA)])
        assert rc == 2


class TestBlowupCheck:
    def test_banana(self, problem, capsys):
        rc, payload, _ = run(capsys, ["blowup-check", problem(BANANA)])
        assert rc == 0
        assert payload["total"] == 4
        assert payload["expected_total"] == 4
        assert payload["exceptional_vertices"] == {"e0": "e0*", "e1": "e1*"}
        counts = {tuple(b["stratum"]): b["count"] for b in payload["buckets"]}
        assert counts[()] == 2
        assert counts[("e0", "e1")] == 0


class TestProblemFileValidation:
    def test_missing_file(self, capsys, tmp_path):
        rc, _, err = run(capsys, ["complexity", str(tmp_path / "nope.json")])
        assert rc == 2
        assert "cannot read" in err

    def test_invalid_json(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{nope")
        rc, _, err = run(capsys, ["complexity", str(path)])
        assert rc == 2
        assert "invalid JSON" in err

    def test_float_polarization_rejected(self, problem, capsys):
        data = dict(BANANA, polarization={"u": 0.5, "v": 0.5})
        rc, _, err = run(capsys, ["enum", problem(data)])
        assert rc == 2
        assert "float" in err

    def test_fractional_total_rejected(self, problem, capsys):
        data = dict(BANANA, polarization={"u": "1/2", "v": 0})
        rc, _, err = run(capsys, ["enum", problem(data)])
        assert rc == 2
        assert "total" in err

    def test_unknown_vertex_in_edge(self, problem, capsys):
        data = {"vertices": ["a"], "edges": [{"endpoints": ["a", "zz"]}]}
        rc, _, err = run(capsys, ["complexity", problem(data)])
        assert rc == 2
        assert "zz" in err

    def test_unknown_stratum_edge(self, problem, capsys):
        rc, _, err = run(capsys, ["enum", problem(BANANA), "--stratum", "e9"])
        assert rc == 2
        assert "e9" in err

    def test_unknown_basepoint(self, problem, capsys):
        rc, _, _ = run(capsys, ["enum", problem(BANANA), "--basepoint", "zz"])
        assert rc == 2

    def test_duplicate_vertex_names(self, problem, capsys):
        data = {"vertices": ["a", "a"], "edges": []}
        rc, _, err = run(capsys, ["complexity", problem(data)])
        assert rc == 2
        assert "duplicate" in err

    def test_explicit_edge_ids(self, problem, capsys):
        data = {
            "vertices": ["a", "b"],
            "edges": [
                {"id": "left", "endpoints": ["a", "b"]},
                {"id": "right", "endpoints": ["a", "b"]},
            ],
            "polarization": {"a": 1, "b": 0},
        }
        rc, payload, _ = run(capsys, ["enum", problem(data), "--stratum", "left"])
        assert rc == 0
        assert payload["count"] == 1

    def test_vertex_objects_with_genus(self, problem, capsys):
        data = {
            "vertices": [{"name": "a", "genus": 1}, {"name": "b", "genus": 1}],
            "edges": [{"endpoints": ["a", "b"]}],
        }
        rc, payload, _ = run(capsys, ["complexity", problem(data)])
        assert rc == 0
        assert payload["complexity"] == 1

    def test_bad_genus(self, problem, capsys):
        data = {"vertices": [{"name": "a", "genus": -1}], "edges": []}
        rc, _, err = run(capsys, ["complexity", problem(data)])
        assert rc == 2
        assert "genus" in err
