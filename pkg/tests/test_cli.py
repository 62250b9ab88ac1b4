"""End-to-end tests of the command-line front end and its file formats."""

import json
import math

import numpy as np
import pytest

from dsitnikov import cli


def run(args):
    return cli.main(args)


def read(path):
    return path.read_text(encoding="utf-8")


class TestOrbitCommand:
    def test_single_row_at_t_end_zero(self, tmp_path):
        out = tmp_path / "o.csv"
        rc = run(["orbit", "--h3=-1.0", "--h4=-1.0", "--t-end=0", "--dt=0.1",
                  "--out", str(out)])
        assert rc == 0
        lines = read(out).splitlines()
        assert lines[0] == "t,q3,p3,q4,p4,H"
        assert len(lines) == 2
        h_col = float(lines[1].split(",")[5])
        assert h_col == pytest.approx(-2.0, abs=1e-12)

    def test_byte_identical_reruns(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["orbit", "--h3=-0.9", "--h4=-0.7", "--nu0-4=1.1",
                "--t-end=2.0", "--dt=0.01"]
        assert run(args + ["--out", str(a)]) == 0
        assert run(args + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_modes_agree(self, tmp_path):
        a, b = tmp_path / "cf.csv", tmp_path / "num.csv"
        base = ["orbit", "--h3=-1.0", "--h4=-0.8", "--nu0-4=0.9",
                "--t-end=3.0", "--dt=0.001"]
        assert run(base + ["--mode=closed-form", "--out", str(a)]) == 0
        assert run(base + ["--mode=integrate", "--out", str(b)]) == 0
        rows_a = np.loadtxt(str(a), delimiter=",", skiprows=1)
        rows_b = np.loadtxt(str(b), delimiter=",", skiprows=1)
        assert rows_a.shape == rows_b.shape
        assert np.max(np.abs(rows_a - rows_b)) <= 1e-8

    def test_bounce_mode_events_and_conservation(self, tmp_path):
        out = tmp_path / "b.csv"
        rc = run(["orbit", "--h3=-1.2", "--h4=-0.9", "--nu0-3=0.4",
                  "--nu0-4=2.9", "--t-end=8.0", "--dt=0.001", "--mode=bounce",
                  "--out", str(out)])
        assert rc == 0
        text = read(out)
        assert "t_bounce,q_at_bounce" in text
        main, events = text.split("t_bounce,q_at_bounce\n")
        rows = np.loadtxt(main.splitlines(), delimiter=",", skiprows=1)
        h_col = rows[:, 5]
        assert np.max(np.abs(h_col - h_col[0])) <= 1e-9
        assert len(events.strip().splitlines()) >= 1

    def test_json_shape(self, tmp_path):
        out = tmp_path / "o.json"
        rc = run(["orbit", "--h3=-1.0", "--h4=-1.0", "--t-end=0.5", "--dt=0.1",
                  "--format=json", "--out", str(out)])
        assert rc == 0
        doc = json.loads(read(out))
        assert doc["meta"]["command"] == "orbit"
        assert doc["meta"]["version"]
        assert len(doc["rows"]) == 6
        assert set(doc["rows"][0]) == {"t", "q3", "p3", "q4", "p4", "H"}

    def test_domain_error_exit_code(self, tmp_path, capsys):
        rc = run(["orbit", "--h3=0.5", "--h4=-1.0", "--t-end=1", "--dt=0.1",
                  "--out", str(tmp_path / "x.csv")])
        assert rc == 2
        assert "--h3" in capsys.readouterr().err


class TestPeriodTableCommand:
    def test_columns_and_monotonicity(self, tmp_path):
        out = tmp_path / "t.csv"
        rc = run(["period-table", "--h-min=-1.95", "--h-max=-0.1", "--steps=40",
                  "--out", str(out)])
        assert rc == 0
        lines = read(out).splitlines()
        assert lines[0] == "h,k,T,J,Omega"
        rows = np.loadtxt(lines[1:], delimiter=",")
        h, k, t_col, j_col, om = rows.T
        assert np.all(np.diff(t_col) > 0)
        assert np.all(np.diff(j_col) > 0)
        assert np.allclose(k, np.sqrt(2.0 + h) / 2.0, atol=1e-15)
        assert np.allclose(om, t_col / (2.0 * np.pi), atol=1e-15)

    def test_first_row_near_rest(self, tmp_path):
        out = tmp_path / "t.csv"
        run(["period-table", "--h-min=-1.9999", "--h-max=-1.0", "--steps=3",
             "--out", str(out)])
        first = read(out).splitlines()[1].split(",")
        assert float(first[2]) == pytest.approx(math.pi / math.sqrt(2.0), abs=1e-3)
        assert abs(float(first[3])) < 1e-3

    def test_range_validation(self, tmp_path):
        rc = run(["period-table", "--h-min=-0.1", "--h-max=-1.0", "--steps=5",
                  "--out", str(tmp_path / "x.csv")])
        assert rc == 2


class TestCatalogCommand:
    def test_p1_rows_and_summary(self, tmp_path):
        out = tmp_path / "c.csv"
        rc = run(["catalog", "--p-max=1", "--out", str(out)])
        assert rc == 0
        text = read(out)
        main, summary = text.split("p,count,bound\n")
        rows = main.strip().splitlines()
        assert rows[0] == "p,q,n,h1,h2,h_star,tau"
        assert len(rows) == 5                       # header + 4 triplets
        h_stars = [float(r.split(",")[5]) for r in rows[1:]]
        assert all(-4.0 < h < 0.0 for h in h_stars)
        assert summary.strip() == "1,4,10"

    def test_json_meta(self, tmp_path):
        out = tmp_path / "c.json"
        run(["catalog", "--p-max=2", "--format=json", "--out", str(out)])
        doc = json.loads(read(out))
        assert doc["meta"]["p_max"] == 2
        assert doc["meta"]["distinct_surfaces"] >= 1
        assert {r["p"] for r in doc["summary"]} == {1, 2}


class TestInvertCommand:
    def test_round_trip(self, tmp_path):
        out = tmp_path / "i.csv"
        rc = run(["invert", "--period=6.5", "--out", str(out)])
        assert rc == 0
        row = read(out).splitlines()[1].split(",")
        assert float(row[3]) <= 1e-11              # residual column
        assert -2.0 < float(row[1]) < 0.0

    def test_below_infimum(self, tmp_path):
        rc = run(["invert", "--period=1.0", "--out", str(tmp_path / "x.csv")])
        assert rc == 2


class TestVerifyCommand:
    def test_failures_exit_code(self, tmp_path, monkeypatch):
        from dsitnikov import verify as vmod

        def fake_run(suite):
            return [vmod.CheckResult("elliptic", "forced", False, 1.0, 0.0, "x,y")]

        monkeypatch.setattr(cli.verify, "run_suites", fake_run)
        out = tmp_path / "v.csv"
        rc = run(["verify", "--suite=elliptic", "--out", str(out)])
        assert rc == 3
        assert '"x,y"' in read(out)          # comma-bearing detail is quoted

    def test_elliptic_suite_passes(self, tmp_path):
        out = tmp_path / "v.csv"
        rc = run(["verify", "--suite=elliptic", "--out", str(out)])
        assert rc == 0
        lines = read(out).splitlines()
        assert lines[0] == "suite,check,passed,residual,tolerance,detail"
        assert all(line.split(",")[2] == "true" for line in lines[1:])

    def test_json_report(self, tmp_path):
        out = tmp_path / "v.json"
        rc = run(["verify", "--suite=elliptic", "--format=json", "--out", str(out)])
        assert rc == 0
        doc = json.loads(read(out))
        assert doc["meta"]["failures"] == 0
        assert all(r["passed"] for r in doc["rows"])


def test_stdout_output(capsys):
    rc = run(["invert", "--period=7.0"])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.startswith("T_target,h,k,residual\n")


def test_seventeen_significant_digits(tmp_path):
    out = tmp_path / "t.csv"
    run(["period-table", "--h-min=-1.5", "--h-max=-0.5", "--steps=2",
         "--out", str(out)])
    cell = read(out).splitlines()[1].split(",")[0]
    mantissa = cell.split("e")[0].replace("-", "").replace(".", "")
    assert len(mantissa) == 17
