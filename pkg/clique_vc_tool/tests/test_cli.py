# -*- coding: utf-8 -*-
"""Tests for the command line interface."""

##### IMPORTS #####
# Standard imports
import io
import json
from fractions import Fraction

# Third party imports
import pytest

# Local imports
from CVT import cli, graph_core
from CVT.theorem_bench import bounds


##### FUNCTIONS #####
def _run(*argv: str) -> tuple[int, str]:
    stdout = io.StringIO()
    status = cli.run(list(argv), stdout)
    return status, stdout.getvalue()


def _run_json(*argv: str) -> dict:
    status, output = _run(*argv)
    assert status == cli.EXIT_OK
    return json.loads(output)


##### FIXTURES #####
@pytest.fixture(name="p4_file")
def fixture_p4_file(tmp_path, p4):
    path = tmp_path / "p4.txt"
    path.write_text(graph_core.serialize_edge_list(p4), encoding="utf-8")
    return path


##### TESTS #####
class TestGen:
    def test_chordal_extremal(self):
        status, output = _run("gen", "--kind", "chordal-extremal", "--n", "100", "--c", "0.75")
        assert status == cli.EXIT_OK
        assert output.splitlines()[0] == "100 3725"
        assert graph_core.parse_edge_list(output).m == 3725

    def test_fraction_density(self):
        _, decimal = _run("gen", "--kind", "chordal-extremal", "--n", "40", "--c", "0.75")
        _, fraction = _run("gen", "--kind", "chordal-extremal", "--n", "40", "--c", "3/4")
        assert decimal == fraction

    def test_json(self):
        result = _run_json("gen", "--kind", "cycle", "--n", "4", "--format", "json")["result"]
        assert result == {"n": 4, "m": 4, "edges": [[0, 1], [0, 3], [1, 2], [2, 3]]}

    @pytest.mark.parametrize(
        "argv, n, m",
        [
            (["--kind", "blow-up", "--base", "complete", "--base-n", "3", "--t", "2"], 6, 12),
            (["--kind", "shatter-gadget", "--t", "3"], 11, 12),
            (["--kind", "polarity", "--q", "3"], 13, 24),
            (["--kind", "join-split", "--n", "7", "--t", "3"], 7, 18),
            (["--kind", "random", "--n", "10", "--p", "1"], 10, 45),
        ],
    )
    def test_kinds(self, argv, n, m):
        status, output = _run("gen", *argv)
        assert status == cli.EXIT_OK
        assert output.splitlines()[0] == f"{n} {m}"

    def test_seeded_output(self):
        argv = ("gen", "--kind", "random", "--n", "30", "--p", "0.3", "--seed", "4")
        assert _run(*argv) == _run(*argv)


class TestCommands:
    def test_analyze(self, p4_file):
        output = _run_json("analyze", "--input", str(p4_file))
        assert output["config"]["input"] == str(p4_file)
        result = output["result"]
        assert result["omega"] == 2
        assert result["n_maximal_cliques"] == 3
        assert result["density"]["count"] == 3
        assert result["clique_counts"] == [1, 4, 3]

    def test_analyze_large_clique(self):
        # One 51-clique per independent vertex, counting every order is 2^51 work
        argv = ("analyze", "--kind", "chordal-extremal", "--n", "100", "--c", "0.75")
        result = _run_json(*argv)["result"]
        assert result["omega"] == 51
        assert result["n_maximal_cliques"] == 50
        assert result["density"]["count"] == 3725
        assert result["clique_counts"] == [1, 100, 3725]

    @pytest.mark.parametrize("r, counts", [(0, [1]), (1, [1, 4]), (3, [1, 4, 3, 0])])
    def test_analyze_order(self, p4_file, r, counts):
        result = _run_json("analyze", "--input", str(p4_file), "--r", str(r))["result"]
        assert result["density"]["r"] == r
        assert result["clique_counts"] == counts
        assert result["omega"] == 2

    def test_stdin(self, monkeypatch, c5):
        monkeypatch.setattr("sys.stdin", io.StringIO(graph_core.serialize_edge_list(c5)))
        result = _run_json("vc", "--input", "-")["result"]
        assert result["k"] == 2
        assert result["witness"] == [0, 1]
        assert result["certificate"]["realizers"] == {"0": 3, "1": 1, "2": 2, "3": 0}

    def test_vc_neighbourhoods(self):
        argv = ["vc", "--kind", "shatter-gadget", "--t", "3", "--system", "neighborhood"]
        result = _run_json(*argv)
        assert result["result"]["system"] == "neighborhood"
        assert result["result"]["k"] >= 3

    def test_check_free(self, p4_file):
        output = _run_json("check-free", "--input", str(p4_file), "--r", "2")
        assert output["config"]["seed"] == 0
        result = output["result"]
        assert result["verdict"] == "contains"
        assert result["witness"]["u"] == [1, 2]
        assert result["witness"]["u_prime"] == [3, 0]

    def test_check_free_extract(self):
        result = _run_json(
            "check-free",
            "--kind",
            "shatter-gadget",
            "--t",
            "3",
            "--inner-policy",
            "complete_A",
            "--r",
            "3",
            "--method",
            "extract",
        )["result"]
        assert result["verdict"] == "contains"
        assert result["witness"]["u"] == [0, 1, 2]

    def test_check_free_sweep_csv(self, p4_file):
        status, output = _run(
            "check-free", "--input", str(p4_file), "--r", "2", "--sweep", "--format", "csv"
        )
        assert status == cli.EXIT_OK
        lines = output.splitlines()
        assert lines[0].startswith("family,n_masks,status")
        assert len(lines) == 6

    def test_verify(self):
        result = _run_json("verify", "--kind", "complete", "--n", "5", "--r", "2")["result"]
        assert result["free"] is True
        assert result["omega"] == 5
        assert result["violations"] == []

    def test_experiment(self, tmp_path):
        csv_path = tmp_path / "samples.csv"
        argv = ["experiment", "--kind", "cycle", "--n", "7", "--r", "2", "--m", "4"]
        argv += ["--samples", "50", "--csv", str(csv_path)]
        result = _run_json(*argv)["result"]
        assert result["samples"] == 50
        assert csv_path.read_text(encoding="utf-8").startswith("index,trace_size")

    def test_experiment_threads(self):
        argv = ["experiment", "--kind", "random", "--n", "20", "--p", "0.5"]
        argv += ["--r", "2", "--m", "5", "--samples", "100"]
        single = _run_json(*argv)
        threaded = _run_json(*argv, "--threads", "4")
        assert single["result"] == threaded["result"]
        assert _run(*argv) == _run(*argv)

    def test_family(self, tmp_path):
        result = _run_json("family", "--r", "3", "--output", str(tmp_path / "members"))
        assert result["result"]["members"] == 8
        files = sorted((tmp_path / "members").iterdir())
        assert len(files) == 8
        assert files[0].name == "family_r3_mask0.txt"
        assert graph_core.parse_edge_list(files[7].read_text(encoding="utf-8")).m == 12


class TestConfig:
    def test_example(self, tmp_path):
        path = tmp_path / "example.yml"
        status, _ = _run("--config", str(path), "--example")
        assert status == cli.EXIT_OK
        config = cli.RunConfig.load_yaml(path)
        assert config.command == "verify"
        assert config.kind == "chordal-extremal"

    def test_config_with_override(self, tmp_path):
        path = tmp_path / "run.yml"
        cli.RunConfig(command="gen", kind="cycle", n=5).save_yaml(path)
        status, output = _run("--config", str(path))
        assert status == cli.EXIT_OK
        assert output.splitlines()[0] == "5 5"
        status, output = _run("--config", str(path), "gen", "--n", "6")
        assert output.splitlines()[0] == "6 6"

    def test_log_file(self, tmp_path, p4_file):
        log_file = tmp_path / "cvt.log"
        _run("--log-file", str(log_file), "check-free", "--input", str(p4_file), "--r", "2")
        assert "DEBUG" in log_file.read_text(encoding="utf-8")


class TestExitCodes:
    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["gen"],
            ["gen", "--kind", "cycle", "--n", "5", "--input", "graph.txt"],
            ["verify", "--kind", "cycle", "--n", "5"],
            ["gen", "--kind", "cycle"],
            ["gen", "--kind", "cycle", "--n", "2"],
            ["gen", "--kind", "octahedron", "--n", "5"],
            ["analyze", "--input", "missing_file.txt"],
            ["analyze", "--kind", "cycle", "--n", "5", "--r", "-1"],
            ["family", "--r", "9"],
        ],
    )
    def test_usage(self, argv):
        status, output = _run(*argv)
        assert status == cli.EXIT_USAGE
        assert output == ""

    def test_parse_error(self, tmp_path, caplog):
        path = tmp_path / "loop.txt"
        path.write_text("3 1\n1 1\n", encoding="utf-8")
        status, _ = _run("analyze", "--input", str(path))
        assert status == cli.EXIT_USAGE
        assert "self-loop at line 2" in caplog.text

    def test_resource_limit(self):
        status, output = _run("analyze", "--kind", "cycle", "--n", "5", "--clique-cap", "1")
        assert status == cli.EXIT_RESOURCE
        assert output == ""
        status, _ = _run("gen", "--kind", "complete", "--n", "50", "--max-vertices", "10")
        assert status == cli.EXIT_RESOURCE

    def test_violation(self, monkeypatch):
        monkeypatch.setattr(bounds, "bound_main", lambda n, c, r: Fraction(n + 1))
        monkeypatch.setattr(bounds, "n_threshold", lambda r, c: 1)
        status, output = _run("verify", "--kind", "complete", "--n", "5", "--r", "2")
        assert status == cli.EXIT_VIOLATION
        assert json.loads(output)["result"]["violations"]
