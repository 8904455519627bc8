import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import pytest

from tropmat.cli import main

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def graph_path(tmp_path_factory):
    text = resources.files("tropmat").joinpath("data/running_example.json").read_text()
    path = tmp_path_factory.mktemp("cli") / "running.json"
    path.write_text(text)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestHappyPaths:
    def test_bases_text(self, capsys, graph_path):
        code, out, _ = run(capsys, "bases", "--graph", graph_path)
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "ground size 5, rank 3, 8 bases"
        assert lines[1] == "B1 = {1, 2, 4}"
        assert lines[-1] == "B8 = {3, 4, 5}"

    def test_bases_json(self, capsys, graph_path):
        code, out, _ = run(capsys, "bases", "--format", "json", "--graph", graph_path)
        obj = json.loads(out)
        assert code == 0
        assert obj["ground_size"] == 5
        assert len(obj["bases"]) == 8

    def test_bases_from_file(self, capsys):
        code, out, _ = run(capsys, "bases", "--bases", str(DATA / "running_example_bases.json"))
        assert code == 0
        assert "8 bases" in out

    def test_nonbases(self, capsys, graph_path):
        code, out, _ = run(capsys, "nonbases", "--graph", graph_path)
        assert code == 0
        assert out.splitlines() == ["2 non bases", "{1, 2, 3}", "{2, 4, 5}"]

    def test_origin_type(self, capsys, graph_path):
        code, out, _ = run(capsys, "origin-type", "--graph", graph_path)
        assert code == 0
        assert out.splitlines() == [
            "type at 0: (12345, 1267, 34678, 13568, 24578)",
            "coarse: (5, 4, 5, 5, 5)",
        ]

    def test_fvector(self, capsys, graph_path):
        code, out, _ = run(capsys, "complex", "--fvector", "--graph", graph_path)
        assert code == 0
        assert out.strip() == "[14, 78, 172, 180, 73]"

    def test_fvector_with_empty_face(self, capsys, graph_path):
        code, out, _ = run(
            capsys, "complex", "--fvector", "--with-empty-face",
            "--format", "json", "--graph", graph_path,
        )
        assert code == 0
        assert json.loads(out) == [1, 14, 78, 172, 180, 73]

    def test_cross_validate(self, capsys, graph_path):
        code, out, _ = run(
            capsys, "coarse-types", "--cross-validate", "--graph", graph_path
        )
        assert code == 0
        assert out.strip() == "OK: 73 cells, formula == enumeration"

    def test_formula_and_brute_agree_in_size(self, capsys, graph_path):
        code, out, _ = run(capsys, "coarse-types", "--formula", "--graph", graph_path)
        assert code == 0
        assert out.splitlines()[0] == "73 coarse types from the counting formula"
        code, out, _ = run(capsys, "coarse-types", "--brute", "--graph", graph_path)
        assert code == 0
        assert out.splitlines()[0] == "73 maximal cells by enumeration"

    def test_ideal(self, capsys, graph_path):
        code, out, _ = run(capsys, "ideal", "--graph", graph_path)
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "73 generators in 5 variables"
        assert len(lines) == 74
        assert lines[1] == "x_5^8"

    def test_ideal_zero_based(self, capsys, graph_path):
        code, out, _ = run(capsys, "ideal", "--zero-based-vars", "--graph", graph_path)
        assert code == 0
        assert out.splitlines()[1] == "x_4^8"

    def test_hypersimplex_halfspaces(self, capsys):
        code, out, _ = run(capsys, "hypersimplex-halfspaces", "-k", "2", "-d", "2")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "6 halfspaces for the uniform matroid (2, 2)"
        assert len(lines) == 7

    def test_check_minimal(self, capsys):
        code, out, _ = run(
            capsys, "check-minimal", "--uniform", "2", "3",
            "--apex", "0,0,0,0", "--sectors", "1,2,3",
        )
        assert code == 0
        assert out.strip() == "min(x_1, x_2, x_3) <= x_4: minimal"

    def test_verify_exterior(self, capsys):
        code, out, _ = run(capsys, "verify-exterior", "--uniform", "2", "2")
        assert code == 0
        assert out.splitlines() == [
            "109 probes, 0 counterexamples",
            "exterior description verified",
        ]

    def test_skeleton(self, capsys, graph_path):
        code, out, _ = run(capsys, "skeleton", "--dot", "--graph", graph_path)
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "graph skeleton {"
        assert sum(1 for l in lines if "--" in l) == 29

    def test_check_single_input(self, capsys):
        code, out, _ = run(capsys, "check", "--uniform", "2", "3")
        assert code == 0
        assert out.splitlines()[-1] == "all 1 checks passed"

    def test_corners_and_generators_and_pv_and_bounded(self, capsys, graph_path):
        for cmd, needle in [
            ("corners", "c_1 = (1, 0, 0, 0, 0)"),
            ("generators", "v1 = (0, 0, 1, 0, 1)"),
            ("pseudovertices", "14 pseudovertices"),
            ("bounded-cells", "16 maximal bounded cells"),
        ]:
            code, out, _ = run(capsys, cmd, "--graph", graph_path)
            assert code == 0
            assert needle in out


class TestDeterminism:
    def test_json_complex_is_byte_stable(self, capsys, graph_path):
        _, one, _ = run(capsys, "complex", "--format", "json", "--graph", graph_path)
        _, two, _ = run(capsys, "complex", "--format", "json", "--graph", graph_path)
        assert one == two
        obj = json.loads(one)
        assert obj["f_vector"] == [14, 78, 172, 180, 73]
        assert len(obj["cells"]) == 517


class TestFailurePaths:
    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "bases", "--graph", "/no/such/file.json")
        assert code == 1
        assert "error:" in err

    def test_no_input(self, capsys):
        code, _, err = run(capsys, "bases")
        assert code == 1
        assert "exactly one" in err

    def test_two_inputs(self, capsys, graph_path):
        code, _, err = run(capsys, "bases", "--graph", graph_path, "--uniform", "2", "3")
        assert code == 1
        assert "exactly one" in err

    def test_invalid_graph(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"vertices": ["a", "b"], "edges": [["a", "b"]]}')
        code, _, err = run(capsys, "bases", "--graph", str(bad))
        assert code == 1
        assert "bridge" in err.lower()

    def test_mode_required(self, capsys, graph_path):
        code, _, err = run(capsys, "coarse-types", "--graph", graph_path)
        assert code == 1
        assert "exactly one of" in err

    def test_bad_apex_arity(self, capsys):
        code, _, err = run(
            capsys, "check-minimal", "--uniform", "2", "3",
            "--apex", "0,0", "--sectors", "1",
        )
        assert code == 1

    def test_cross_validation_mismatch_exits_two(self, capsys):
        # rank one falls outside the counting formula's assumptions
        code, out, _ = run(
            capsys, "coarse-types", "--cross-validate", "--uniform", "1", "1"
        )
        assert code == 2
        assert out.startswith("MISMATCH")

    def test_cap_exceeded(self, capsys, graph_path):
        code, _, err = run(
            capsys, "complex", "--graph", graph_path, "--cap", "100"
        )
        assert code == 1
        assert "exceed" in err


class TestConsoleScript:
    def test_entry_point_runs(self, graph_path):
        proc = subprocess.run(
            [sys.executable, "-m", "tropmat.cli", "origin-type", "--graph", graph_path],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "(12345, 1267, 34678, 13568, 24578)" in proc.stdout
