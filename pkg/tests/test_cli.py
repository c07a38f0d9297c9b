import json

from rainbowgraphs import cli
from rainbowgraphs.constructions import build_gk, build_hnk
from rainbowgraphs.graphs import format_edgelist, format_json, parse_edgelist
from rainbowgraphs.transform import parse_digraph
from rainbowgraphs.verify import VerificationReport


def run(args):
    return cli.main(args)


class TestGenerate:
    def test_gk_bytes_match_library(self, tmp_path, capsys):
        out = tmp_path / "g.edges"
        assert run(["generate", "gk", "--n", "10", "--k", "2",
                    "--out", str(out)]) == 0
        assert out.read_text() == format_edgelist(build_gk(10, 2).graph)
        meta = json.loads((tmp_path / "g.edges.meta.json").read_text())
        assert meta["stats"] == {"n": 10, "m": 45, "c": 11}
        assert len(meta["structure"]["triangles"]) == 2

    def test_turan_rainbow(self, tmp_path):
        out = tmp_path / "t.edges"
        assert run(["generate", "turan", "--n", "11", "--parts", "5",
                    "--rainbow", "--out", str(out)]) == 0
        G = parse_edgelist(out.read_text())
        assert (G.m, G.c) == (48, 48)

    def test_precondition_violation_exit_2(self, tmp_path, capsys):
        assert run(["generate", "gk", "--n", "5", "--k", "2"]) == 2
        assert "n < 3k" in capsys.readouterr().err

    def test_missing_params_exit_1(self, capsys):
        assert run(["generate", "gk", "--n", "10"]) == 1

    def test_stdout_default(self, capsys):
        assert run(["generate", "gk", "--n", "6", "--k", "1"]) == 0
        assert capsys.readouterr().out == format_edgelist(build_gk(6, 1).graph)

    def test_json_format(self, tmp_path):
        out = tmp_path / "g.json"
        assert run(["generate", "hnk", "--n", "8", "--k", "6",
                    "--format", "json", "--out", str(out)]) == 0
        assert out.read_text() == format_json(build_hnk(8, 6).graph)

    def test_recolored_g1(self, tmp_path):
        out = tmp_path / "w.edges"
        assert run(["generate", "recolored-g1", "--n", "7",
                    "--out", str(out)]) == 0
        assert parse_edgelist(out.read_text()).n == 7


class TestAnalyze:
    def test_figure_report(self, tmp_path, capsys):
        graph_file = tmp_path / "g.edges"
        graph_file.write_text(format_edgelist(build_gk(10, 2).graph))
        assert run(["analyze", str(graph_file)]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["m_plus_c"] == 56
        assert report["rainbow_triangles"]["count"] == 2
        assert report["thresholds"]["triangle_mc"]["guaranteed"] == 2

    def test_empty_graph(self, tmp_path, capsys):
        graph_file = tmp_path / "e.edges"
        graph_file.write_text("4 0\n")
        assert run(["analyze", str(graph_file)]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["m"] == 0 and report["c"] == 0
        assert report["rainbow_triangles"]["count"] == 0

    def test_hnk_threshold_deficit(self, tmp_path, capsys):
        graph_file = tmp_path / "h.edges"
        graph_file.write_text(format_edgelist(build_hnk(11, 7).graph))
        assert run(["analyze", str(graph_file), "--clique-bound", "7"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["rainbow_cliques"]["7"] is False
        info = report["thresholds"]["clique_mc"]["7"]
        assert info["deficit"] == 1 and not info["meets"]

    def test_parse_failure_exit_1(self, tmp_path, capsys):
        bad = tmp_path / "bad.edges"
        bad.write_text("3 1\n0 9 0\n")
        assert run(["analyze", str(bad)]) == 1
        assert "line 2" in capsys.readouterr().err

    def test_missing_file_exit_1(self, capsys):
        assert run(["analyze", "/nonexistent/file"]) == 1


class TestCheck:
    def test_gk_json(self, tmp_path, capsys):
        graph_file = tmp_path / "g.edges"
        graph_file.write_text(format_edgelist(build_gk(9, 1).graph))
        assert run(["check", "gk", str(graph_file), "--k", "1"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["member"] is True
        assert payload["certificate"]["k"] == 1

    def test_hk_verdict(self, tmp_path, capsys):
        graph_file = tmp_path / "h.edges"
        graph_file.write_text(format_edgelist(build_hnk(9, 6).graph))
        assert run(["check", "hk", str(graph_file), "--k", "6",
                    "--verdict"]) == 0
        assert "yes" in capsys.readouterr().out

    def test_non_member(self, tmp_path, capsys):
        graph_file = tmp_path / "g.edges"
        graph_file.write_text(format_edgelist(build_gk(9, 1).graph))
        assert run(["check", "gk", str(graph_file), "--k", "2"]) == 0
        assert json.loads(capsys.readouterr().out)["member"] is False

    def test_turan_partition(self, tmp_path, capsys):
        graph_file = tmp_path / "h.edges"
        graph_file.write_text(format_edgelist(build_hnk(9, 6).graph))
        assert run(["check", "turan-partition", str(graph_file),
                    "--parts", "4"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["member"] is True


class TestTransform:
    def test_associate(self, tmp_path, capsys):
        digraph_file = tmp_path / "d.arcs"
        digraph_file.write_text("3 3\n0 1\n1 2\n2 0\n")
        report_file = tmp_path / "omega.json"
        assert run(["transform", "associate", str(digraph_file),
                    "--report", str(report_file)]) == 0
        G = parse_edgelist(capsys.readouterr().out)
        omega = json.loads(report_file.read_text())
        assert G.c == omega["omega_sum"] == 3
        assert G.m == omega["a"] == 3

    def test_orient_roundtrip(self, tmp_path, capsys):
        graph_file = tmp_path / "g.edges"
        graph_file.write_text("3 3\n0 1 0\n0 2 2\n1 2 1\n")
        assert run(["transform", "orient", str(graph_file)]) == 0
        D = parse_digraph(capsys.readouterr().out)
        assert D.arcs == frozenset({(0, 1), (1, 2), (2, 0)})

    def test_orient_precondition_exit_2(self, tmp_path, capsys):
        graph_file = tmp_path / "g.edges"
        graph_file.write_text("4 3\n0 1 9\n1 2 9\n2 3 9\n")
        assert run(["transform", "orient", str(graph_file)]) == 2

    def test_digon_parse_exit_1(self, tmp_path):
        digraph_file = tmp_path / "d.arcs"
        digraph_file.write_text("2 2\n0 1\n1 0\n")
        assert run(["transform", "associate", str(digraph_file)]) == 1


class TestConvert:
    def test_roundtrip_bytes(self, tmp_path, capsys):
        G = build_gk(8, 2).graph
        src = tmp_path / "g.edges"
        src.write_text(format_edgelist(G))
        js = tmp_path / "g.json"
        assert run(["convert", str(src), "--to", "json", "--out", str(js)]) == 0
        back = tmp_path / "g2.edges"
        assert run(["convert", str(js), "--to", "edgelist",
                    "--out", str(back)]) == 0
        assert back.read_text() == src.read_text()

    def test_dot(self, tmp_path, capsys):
        src = tmp_path / "k3.edges"
        src.write_text("3 3\n0 1 0\n0 2 2\n1 2 1\n")
        assert run(["convert", str(src), "--to", "dot"]) == 0
        dot = capsys.readouterr().out
        colors = {line.split('color="')[1].split('"')[0]
                  for line in dot.splitlines() if "--" in line}
        assert len(colors) == 3


class TestVerifyCommand:
    def test_t1_ok_exit_0(self, tmp_path, capsys):
        report_file = tmp_path / "r.json"
        assert run(["verify", "T1", "--grid", '{"n_max": 4}',
                    "--json", str(report_file)]) == 0
        table = capsys.readouterr().out
        assert "counterexamples    : 0" in table
        payload = json.loads(report_file.read_text())
        assert payload["instances"] == 210

    def test_seed_flag(self, capsys):
        assert run(["verify", "L2", "--grid", '{"count": 50, "n_max": 6}',
                    "--seed", "9"]) == 0
        assert "seed               : 9" in capsys.readouterr().out

    def test_bad_grid_exit_1(self, capsys):
        assert run(["verify", "T1", "--grid", "not json"]) == 1

    def test_budget_violation_exit_2(self, capsys):
        assert run(["verify", "T1", "--grid", '{"n_max": 7}']) == 2

    def test_counterexample_exit_code_mapping(self):
        # The theorems hold, so exit 3 is exercised via the report path.
        report = VerificationReport("T1", {}, counterexamples=[{"fake": True}])
        assert not report.ok
        assert (cli.EXIT_OK if report.ok else cli.EXIT_COUNTEREXAMPLE) == 3


class TestUsage:
    def test_no_command(self):
        assert run([]) == 1

    def test_unknown_command(self):
        assert run(["frobnicate"]) == 1

    def test_help_exits_zero(self):
        assert run(["--help"]) == 0
