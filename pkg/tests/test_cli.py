import subprocess
import sys

import numpy as np
import pytest

from netimmunize import cli
from netimmunize.report import BENCH_COLUMNS, TIMING_COLUMNS, render_sweep_svg

from .conftest import KARATE_PATH


def run_cli(args: list[str]) -> int:
    return cli.main([str(a) for a in args])


def strip_timing(csv_text: str) -> str:
    """Drop the timing columns so determinism can be compared byte-for-byte."""
    out = []
    drop = [BENCH_COLUMNS.index(c) for c in TIMING_COLUMNS]
    for line in csv_text.splitlines():
        if line.startswith("#"):
            out.append(line)
            continue
        cells = line.split(",")
        out.append(",".join(c for i, c in enumerate(cells) if i not in drop))
    return "\n".join(out)


@pytest.fixture
def p3_file(tmp_path):
    f = tmp_path / "p3.edges"
    f.write_text("0 1\n1 2\n")
    return f


class TestImmunize:
    def test_path3_middle(self, p3_file, capsys):
        assert run_cli(["immunize", "--input", p3_file, "--k", "1"]) == 0
        out = capsys.readouterr().out
        assert "selected: 1" in out
        assert "(100%)" in out

    def test_karate_greedy(self, capsys, tmp_path):
        csv_path = tmp_path / "one.csv"
        code = run_cli(["immunize", "--input", KARATE_PATH, "--one-indexed",
                        "--k", "3", "--out-csv", csv_path])
        assert code == 0
        out = capsys.readouterr().out
        assert "loaded karate: n=34 m=78" in out
        text = csv_path.read_text()
        assert text.splitlines()[-1].split(",")[12] == "ok"
        pct = float(text.splitlines()[-1].split(",")[8])
        assert pct > 0

    def test_greedy1_method(self, capsys):
        assert run_cli(["immunize", "--input", KARATE_PATH, "--one-indexed",
                        "--k", "1", "--method", "greedy1"]) == 0
        assert "selected: 34" in capsys.readouterr().out

    def test_malformed_input(self, tmp_path, capsys):
        bad = tmp_path / "bad.edges"
        bad.write_text("0 1\nnope nope\n")
        assert run_cli(["immunize", "--input", bad, "--k", "1"]) == 1
        err = capsys.readouterr().err
        assert "line 2" in err and "bad.edges" in err

    def test_missing_file(self, tmp_path, capsys):
        assert run_cli(["immunize", "--input", tmp_path / "nope.edges", "--k", "1"]) == 1

    def test_edgeless_graph_warns(self, tmp_path, capsys):
        f = tmp_path / "loops.edges"
        f.write_text("1 1\n2 2\n")
        assert run_cli(["immunize", "--input", f, "--k", "1"]) == 0
        out = capsys.readouterr().out
        assert "no edges" in out
        assert "eigendrop 0 (0%)" in out


class TestSweep:
    def test_karate_grid(self, tmp_path, capsys):
        csv_path = tmp_path / "sweep.csv"
        svg_path = tmp_path / "sweep.svg"
        code = run_cli(["sweep", "--input", KARATE_PATH, "--one-indexed",
                        "--k-list", "1:8", "--methods", "greedy-walk6,degree,random",
                        "--out-csv", csv_path, "--out-svg", svg_path])
        assert code == 0
        rows = [l for l in csv_path.read_text().splitlines()
                if l and not l.startswith("#")]
        assert rows[0] == ",".join(BENCH_COLUMNS)
        assert len(rows) - 1 == 24  # 3 methods x 8 k values
        svg = svg_path.read_text()
        assert svg.count("<polyline") == 3
        assert "greedy-walk6" in svg

    def test_greedy_pct_nondecreasing_in_k(self, tmp_path):
        csv_path = tmp_path / "mono.csv"
        run_cli(["sweep", "--input", KARATE_PATH, "--one-indexed",
                 "--k-list", "1:6", "--methods", "greedy-walk6",
                 "--out-csv", csv_path])
        pcts = [float(l.split(",")[8]) for l in csv_path.read_text().splitlines()
                if l and not l.startswith("#") and not l.startswith("graph")]
        assert all(b >= a - 1e-6 for a, b in zip(pcts, pcts[1:]))

    def test_rerun_identical_modulo_timings(self, tmp_path):
        args = ["sweep", "--input", KARATE_PATH, "--one-indexed",
                "--k-list", "1,3", "--methods", "greedy-walk6,random"]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run_cli(args + ["--out-csv", a])
        run_cli(args + ["--out-csv", b])
        assert strip_timing(a.read_text()) == strip_timing(b.read_text())
        assert "base_seed=0" in a.read_text()  # provenance comment present

    def test_infeasible_cell_recorded_not_crashed(self, tmp_path):
        csv_path = tmp_path / "inf.csv"
        code = run_cli(["sweep", "--input", KARATE_PATH, "--one-indexed",
                        "--k-list", "1,12", "--methods", "exhaustive",
                        "--out-csv", csv_path])
        assert code == 0
        rows = [l.split(",") for l in csv_path.read_text().splitlines()
                if l and not l.startswith("#") and not l.startswith("graph")]
        status = {int(r[4]): r[12] for r in rows}
        assert status[1] == "ok"
        assert status[12].startswith("failed:")


class TestDumpWalks:
    def test_karate_exact(self, tmp_path):
        out = tmp_path / "walks.csv"
        code = run_cli(["dump-walks", "--input", KARATE_PATH, "--one-indexed",
                        "--exact", "--out-csv", out])
        assert code == 0
        rows = [l for l in out.read_text().splitlines()
                if l and not l.startswith("#")]
        assert rows[0] == "node_label,W,cw6"
        assert len(rows) - 1 == 34
        cw6 = [int(r.split(",")[2]) for r in rows[1:]]  # parses as int
        assert sum(cw6) > 0

    def test_beta_nesting(self, tmp_path):
        outs = []
        for beta in (1, 5):
            out = tmp_path / f"b{beta}.csv"
            run_cli(["dump-walks", "--input", KARATE_PATH, "--one-indexed",
                     "--beta", str(beta), "--out-csv", out])
            rows = [l.split(",") for l in out.read_text().splitlines()
                    if l and not l.startswith("#") and not l.startswith("node_label")]
            outs.append(np.array([float(r[1]) for r in rows]))
        assert (outs[1] <= outs[0]).all()

    def test_edgeless_zeros(self, tmp_path):
        f = tmp_path / "loops.edges"
        f.write_text("1 1\n2 2\n3 3\n")
        out = tmp_path / "w.csv"
        run_cli(["dump-walks", "--input", f, "--out-csv", out])
        rows = [l.split(",") for l in out.read_text().splitlines()
                if l and not l.startswith("#") and not l.startswith("node_label")]
        assert all(float(r[1]) == 0.0 for r in rows)

    def test_exact_cap_notice(self, tmp_path, capsys, monkeypatch):
        from netimmunize.walks import SizeCapError

        def refuse(g, **kw):
            raise SizeCapError("too large")

        monkeypatch.setattr(cli, "exact_cw6_all", refuse)
        out = tmp_path / "w.csv"
        code = run_cli(["dump-walks", "--input", KARATE_PATH, "--one-indexed",
                        "--exact", "--out-csv", out])
        assert code == 0
        assert "estimates only" in capsys.readouterr().err
        header = [l for l in out.read_text().splitlines() if not l.startswith("#")][0]
        assert header == "node_label,W"

    def test_stdout_when_no_path(self, p3_file, capsys):
        assert run_cli(["dump-walks", "--input", p3_file]) == 0
        out = capsys.readouterr().out
        assert "node_label,W" in out


class TestEigendrop:
    def test_karate_pair(self, capsys):
        assert run_cli(["eigendrop", "--input", KARATE_PATH, "--one-indexed",
                        "--nodes", "34,1"]) == 0
        out = capsys.readouterr().out
        assert "eigendrop" in out and "nodes: 34 1" in out

    def test_unknown_label(self, capsys):
        with pytest.raises(SystemExit):
            run_cli(["eigendrop", "--input", KARATE_PATH, "--one-indexed",
                     "--nodes", "99"])


class TestSvg:
    def test_series_rendering(self):
        svg = render_sweep_svg([("a", [(1, 10.0), (2, 20.0)]),
                                ("b", [(1, 5.0), (2, 6.0)])], title="t")
        assert svg.startswith("<svg")
        assert svg.count("<polyline") == 2
        assert svg.count("<circle") == 4

    def test_single_point_series(self):
        svg = render_sweep_svg([("a", [(3, 50.0)])])
        assert "<polyline" in svg


def test_module_entrypoint_subprocess(tmp_path):
    f = tmp_path / "p3.edges"
    f.write_text("0 1\n1 2\n")
    proc = subprocess.run([sys.executable, "-m", "netimmunize", "immunize",
                           "--input", str(f), "--k", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "selected: 1" in proc.stdout
