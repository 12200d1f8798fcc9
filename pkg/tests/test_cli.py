import json

import pytest

from mexkit import cli
from mexkit.graphs import graph_from_edges, format_edge_list, parse_edge_list
from mexkit.oracle import SearchResult


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestScalarCommands:
    def test_mex_exact_bytes(self, capsys):
        code, out, _ = run(capsys, "mex", "--m", "25", "--s", "3", "--r", "3", "--format", "json")
        assert code == 0
        assert out == '{"m":25,"s":3,"r":3,"value":22}\n'

    def test_ex(self, capsys):
        code, out, _ = run(capsys, "ex", "--n", "6", "--t", "3", "--r", "3")
        assert code == 0
        assert json.loads(out) == {"n": 6, "t": 3, "r": 3, "value": 8}

    def test_bound(self, capsys):
        code, out, _ = run(capsys, "bound", "--m", "6", "--s", "3")
        assert code == 0
        assert json.loads(out)["value"] == pytest.approx(4.0)

    def test_constants(self, capsys):
        code, out, _ = run(capsys, "constants", "--r", "3", "--s", "3")
        assert code == 0
        payload = json.loads(out)
        assert payload["beta_square"] == "4/3"
        assert payload["c_square"] == "1/27"

    def test_mex_profile_csv(self, capsys):
        code, out, _ = run(capsys, "mex", "--profile", "--m-max", "3", "--s", "3", "--r", "3")
        assert code == 0
        assert out.splitlines() == ["m,value", "1,0", "2,0", "3,1"]

    def test_deterministic_output(self, capsys):
        first = run(capsys, "search", "mex", "--m", "5", "--s", "3", "--forbid-clique", "4")
        second = run(capsys, "search", "mex", "--m", "5", "--s", "3", "--forbid-clique", "4")
        assert first == second


class TestConstruct:
    def test_ct_emits_figure_edges(self, capsys):
        code, out, _ = run(capsys, "construct", "ct", "--r", "3", "--m", "25")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 25
        got = {tuple(sorted(map(int, line.split()))) for line in lines}
        assert {(1, 9), (2, 9), (4, 9), (5, 9)} <= got

    def test_edges_round_trip(self, capsys):
        code, out, _ = run(capsys, "construct", "turan", "--r", "3", "--n", "7")
        g = parse_edge_list(out)
        assert g.edge_count == 16

    def test_gadget_json_reports_attachment(self, capsys):
        code, out, _ = run(
            capsys, "construct", "gadget", "--r", "3", "--m", "24", "--format", "json"
        )
        payload = json.loads(out)
        assert payload["attach_count"] == 3
        assert payload["m"] == 24

    def test_blowup_from_file(self, capsys, tmp_path):
        path = tmp_path / "k3.edges"
        path.write_text(format_edge_list(graph_from_edges([(1, 2), (1, 3), (2, 3)])))
        code, out, _ = run(capsys, "construct", "blowup", "--input", str(path), "--t", "2")
        assert code == 0
        assert parse_edge_list(out).edge_count == 12


class TestCount:
    def test_count_t(self, capsys, tmp_path):
        path = tmp_path / "g.edges"
        path.write_text("1 2\n1 3\n2 3\n3 4\n")
        code, out, _ = run(capsys, "count", "--input", str(path), "--t", "3")
        assert json.loads(out)["value"] == 1

    def test_profile_and_degrees(self, capsys, tmp_path):
        path = tmp_path / "g.edges"
        path.write_text("1 2\n1 3\n2 3\n")
        code, out, _ = run(capsys, "count", "--input", str(path), "--profile")
        assert json.loads(out)["profile"] == [3, 3, 1]
        code, out, _ = run(
            capsys, "count", "--input", str(path), "--min-degrees", "--s", "3"
        )
        payload = json.loads(out)
        assert (payload["min_vertex"], payload["min_edge"]) == (1, 1)


class TestExitCodes:
    def test_unknown_flag_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "mex", "--bogus", "1")
        assert code == 2

    def test_validation_error(self, capsys):
        code, _, err = run(capsys, "mex", "--m", "-3", "--s", "3", "--r", "3")
        assert code == 2 and "error" in err

    def test_cap_exceeded(self, capsys):
        code, _, err = run(
            capsys, "search", "ex", "--n", "9", "--t", "2", "--forbid-clique", "3"
        )
        assert code == 3 and "cap" in err

    def test_cap_override_env(self, capsys, tmp_path, monkeypatch):
        path = tmp_path / "long_path.edges"
        path.write_text("".join(f"{i} {i + 1}\n" for i in range(1, 17)))
        code, _, _ = run(capsys, "search", "min-edits", "--input", str(path), "--r", "2")
        assert code == 3
        monkeypatch.setenv("MEXKIT_CAP_OVERRIDE", "1")
        code, out, _ = run(capsys, "search", "min-edits", "--input", str(path), "--r", "2")
        assert code == 0
        assert json.loads(out)["value"] == 0

    def test_verify_pass_is_zero(self, capsys):
        code, out, _ = run(capsys, "verify", "enumeration", "--m-max", "3")
        assert code == 0 and "ok" in out

    def test_verify_failure_is_one(self, capsys, monkeypatch):
        def fake_mex(m, s, forbidden, cap=None, workers=1):
            return SearchResult(999, (), 0, 0, 0.0)

        monkeypatch.setattr(cli.oracle, "brute_force_mex", fake_mex)
        code, out, _ = run(capsys, "verify", "frohmader", "--r", "3", "--s", "3", "--m-max", "2")
        assert code == 1 and "FAIL" in out


class TestVerifySubcommands:
    def test_frohmader_small(self, capsys):
        code, out, _ = run(capsys, "verify", "frohmader", "--r", "3", "--s", "3", "--m-max", "4")
        assert code == 0
        assert out.count("ok") == 5

    def test_zykov_small(self, capsys):
        code, out, _ = run(capsys, "verify", "zykov", "--r", "3", "--t", "3", "--n-max", "5")
        assert code == 0

    def test_shadows(self, capsys):
        code, _, _ = run(
            capsys, "verify", "shadows", "--n", "5", "--k", "3", "--p", "2", "--size-max", "3"
        )
        assert code == 0
        code, _, _ = run(
            capsys,
            "verify", "shadows", "--n", "5", "--k", "3", "--p", "2", "--size-max", "3",
            "--r", "3",
        )
        assert code == 0

    def test_closed_form_and_constants(self, capsys):
        code, _, _ = run(capsys, "verify", "closed-form", "--r-max", "3", "--n-max", "9")
        assert code == 0
        code, _, _ = run(capsys, "verify", "constants", "--r-max", "6")
        assert code == 0

    def test_gadget(self, capsys):
        code, out, _ = run(capsys, "verify", "gadget", "--r", "3", "--m", "24")
        assert code == 0 and "gadget=21" in out


class TestSearch:
    def test_mex_json_schema(self, capsys):
        code, out, _ = run(
            capsys, "search", "mex", "--m", "7", "--s", "3", "--forbid-clique", "4"
        )
        payload = json.loads(out)
        assert payload == {
            "optimum": 3,
            "witness_count": payload["witness_count"],
            "search_space_size": 177,
        }
        assert "elapsed_ms" not in payload

    def test_timing_flag_adds_elapsed(self, capsys):
        code, out, _ = run(
            capsys, "search", "mex", "--m", "4", "--s", "3", "--forbid-clique", "4",
            "--timing",
        )
        assert "elapsed_ms" in json.loads(out)

    def test_witness_dump_round_trips(self, capsys, tmp_path):
        out_dir = tmp_path / "witnesses"
        code, out, _ = run(
            capsys,
            "search", "mex", "--m", "3", "--s", "3", "--forbid-clique", "4",
            "--witnesses-dir", str(out_dir),
        )
        assert code == 0
        files = sorted(out_dir.glob("witness_*.edges"))
        assert files
        for f in files:
            g = parse_edge_list(f.read_text())
            assert g.edge_count == 3

    def test_min_shadow(self, capsys):
        code, out, _ = run(
            capsys, "search", "min-shadow", "--n", "6", "--k", "3", "--size", "2", "--p", "2"
        )
        assert json.loads(out)["value"] == 5

    def test_blowup(self, capsys, tmp_path):
        path = tmp_path / "t39.edges"
        from mexkit.constructions import turan_graph

        path.write_text(format_edge_list(turan_graph(3, 9)))
        code, out, _ = run(
            capsys, "search", "blowup", "--input", str(path), "--parts", "3", "--t", "3"
        )
        payload = json.loads(out)
        assert payload["found"] is True and len(payload["witness"]) == 3


class TestProcess:
    def test_edge_trace_lines(self, capsys, tmp_path):
        path = tmp_path / "paw.edges"
        path.write_text("1 2\n1 3\n2 3\n3 4\n")
        code, out, _ = run(
            capsys,
            "process", "edge", "--input", str(path), "--s", "3", "--r", "3",
            "--epsilon", "0.3", "--coefficient", "1.0", "--exponent", "0.0",
            "--budget", "4",
        )
        lines = [json.loads(line) for line in out.splitlines()]
        assert lines[0] == {
            "step": 0, "kind": "edge", "item": [3, 4], "value": 0, "edges_after": 3,
        }
        assert lines[-1]["kind"] == "summary"

    def test_stability_report(self, capsys, tmp_path):
        path = tmp_path / "ct.edges"
        from mexkit.constructions import colex_turan_graph

        path.write_text(format_edge_list(colex_turan_graph(3, 25)))
        code, out, _ = run(
            capsys,
            "process", "stability", "--input", str(path), "--r", "3", "--s", "3",
            "--epsilon", "0.1",
        )
        payload = json.loads(out)
        assert payload["ratio"] == 1.0
        assert payload["edits_to_partite"] == 0

    def test_proof_constants(self, capsys):
        code, out, _ = run(
            capsys, "process", "constants", "--r", "3", "--s", "3", "--epsilon", "0.1"
        )
        payload = json.loads(out)
        assert payload["epsilon_prime"] == pytest.approx(0.1 / 49)
        assert 0 < payload["rho"] < 1
