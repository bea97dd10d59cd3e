import json

import pytest

from locdim.cli import main, run_batch
from locdim.generators import labeled_graphs
from locdim.graph import write_graph6

GAP_GRAPH = "N|CGW?@oW@?C?@?@_D?"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestConstruct:
    def test_friendship(self, capsys):
        code, out, _ = run(capsys, "construct", "--name", "friendship:2")
        data = json.loads(out)
        assert code == 0 and data["W"] == [1, 3] and data["bound_ok"]

    def test_k4_rejected(self, capsys):
        code, _, err = run(capsys, "construct", "--name", "K4")
        assert code == 2 and "graph contains K4" in err

    def test_disconnected_rejected(self, capsys):
        code, _, err = run(capsys, "construct", "--g6", "C`")
        assert code == 2 and "disconnected" in err

    def test_bad_graph6(self, capsys):
        code, _, err = run(capsys, "construct", "--g6", "C~~~~")
        assert code == 2 and "error" in err

    def test_needs_one_input(self, capsys):
        assert run(capsys, "construct")[0] == 2
        assert run(capsys, "construct", "--name", "C4", "--g6", "C]")[0] == 2

    def test_gap_graph_exits_3(self, capsys):
        code, out, _ = run(capsys, "construct", "--g6", GAP_GRAPH)
        data = json.loads(out)
        assert code == 3 and data["repair_performed"] and not data["bound_ok"]

    def test_file_and_trace(self, capsys, tmp_path):
        f = tmp_path / "g.g6"
        f.write_text("\n" + write_graph6(labeled_graphs_first()) + "\n")
        code, out, err = run(capsys, "construct", "--file", str(f), "--trace")
        assert code == 0
        rows = [json.loads(line) for line in err.splitlines()]
        assert {r["layer"] for r in rows} <= set(range(1, 11))

    def test_env_default(self, capsys, monkeypatch):
        monkeypatch.setenv("LOCDIM_NODE_CAP", "0")
        code, _, err = run(capsys, "construct", "--name", "C6")
        assert code == 3 and "PackingBudgetError" in err


def labeled_graphs_first():
    return next(g for g in labeled_graphs(5, forbid=4, connected=True) if g.m >= 6)


class TestExact:
    @pytest.mark.parametrize("name, k", [("C5", 2), ("K5", 4), ("P4", 1)])
    def test_values(self, capsys, name, k):
        code, out, _ = run(capsys, "exact", "--name", name)
        assert code == 0 and json.loads(out)["dim_l"] == k

    def test_cap(self, capsys):
        assert run(capsys, "exact", "--name", "C20")[0] == 4
        code, out, _ = run(capsys, "exact", "--name", "C20", "--exact-cap", "20")
        assert code == 0 and json.loads(out)["dim_l"] == 1

    def test_disconnected(self, capsys):
        assert run(capsys, "exact", "--name", "2K2")[0] == 2


class TestVerify:
    def test_ok(self, capsys):
        code, out, _ = run(capsys, "verify", "--name", "C4", "--set", "0")
        assert code == 0 and out.strip() == "ok"

    def test_failing_edge(self, capsys):
        code, out, _ = run(capsys, "verify", "--name", "K3", "-W", "0")
        assert code == 1 and out.strip() == "failing edge 1,2"

    @pytest.mark.parametrize("bad", ["0,x", "9", "-1"])
    def test_bad_set(self, capsys, bad):
        assert run(capsys, "verify", "--name", "C4", "--set", bad)[0] == 2


class TestBatch:
    def write(self, tmp_path, lines):
        f = tmp_path / "in.g6"
        f.write_text("".join(line + "\n" for line in lines))
        return str(f)

    def test_mixed_file(self, capsys, tmp_path):
        path = self.write(tmp_path, ["C]", "C~", "", "!!bad", "Bw"])
        code, out, _ = run(capsys, "batch", path)
        rows = [json.loads(line) for line in out.splitlines()]
        records, summary = rows[:-1], rows[-1]["summary"]
        assert code == 0
        assert [r["line"] for r in records] == [1, 2, 4, 5]
        assert "certificate" in records[0]
        assert records[1]["skipped"] == "contains K4"
        assert records[2]["error"].startswith("parse")
        assert records[3]["skipped"] == "n = 3 < 4"
        assert summary["graphs"] == 4 and summary["parse_errors"] == 1 and summary["skipped"] == 2

    def test_violation_exit(self, capsys, tmp_path):
        code, out, _ = run(capsys, "batch", self.write(tmp_path, [GAP_GRAPH]))
        summary = json.loads(out.splitlines()[-1])["summary"]
        assert code == 3 and summary["violations"] == [GAP_GRAPH] and summary["repairs"] == 1

    def test_empty_file(self, capsys, tmp_path):
        code, out, _ = run(capsys, "batch", self.write(tmp_path, []))
        assert code == 0 and json.loads(out)["summary"]["graphs"] == 0

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "batch", str(tmp_path / "nope"))[0] == 2
        assert run(capsys, "batch")[0] == 2

    def test_report_file(self, capsys, tmp_path):
        report = tmp_path / "out.jsonl"
        code, out, _ = run(capsys, "batch", "--file", self.write(tmp_path, ["C]"]), "--report", str(report))
        assert code == 0 and len(out.splitlines()) == 1
        assert json.loads(report.read_text())["certificate"]["bound_ok"]

    def test_jobs_are_byte_identical(self):
        lines = [write_graph6(g) for g in labeled_graphs(5, forbid=4, connected=True)][:200]
        one = run_batch(lines, 16, 1)
        eight = run_batch(lines, 16, 8)
        dump = lambda r: json.dumps(r, sort_keys=True)
        assert dump(one) == dump(eight)
        assert one[1]["certified"] == 200 and not one[1]["violations"]


class TestGen:
    def test_name(self, capsys):
        code, out, _ = run(capsys, "gen", "--name", "C4")
        assert code == 0 and out.strip() == "Cl"

    def test_random(self, capsys):
        code, out, _ = run(capsys, "gen", "--random", "9", "--count", "3", "--seed", "5")
        assert code == 0 and len(out.split()) == 3
        assert run(capsys, "gen", "--random", "9", "--count", "3", "--seed", "5")[1] == out

    def test_all(self, capsys):
        code, out, _ = run(capsys, "gen", "--all", "4", "--k4-free", "--connected")
        assert code == 0 and len(out.split()) == 37

    def test_errors(self, capsys):
        assert run(capsys, "gen")[0] == 2
        assert run(capsys, "gen", "--name", "wheel")[0] == 2
