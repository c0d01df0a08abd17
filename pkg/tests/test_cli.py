import csv
import io
import subprocess
import sys

import pytest

from hfentangle.cli import EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, main, parse_config, run
from hfentangle.ground import ground_sweep
from hfentangle.report import fmt
from hfentangle.thermal import thermal_sweep


def invoke(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def values(text):
    return dict(line.split("=", 1) for line in text.strip().splitlines())


class TestFormat:
    @pytest.mark.parametrize(
        "x,text",
        [(1 / 3, "0.333333333333"), (-0.0, "0"), (1234567.0, "1234567"), (-1.0, "-1"), (2.5e-17, "2.5e-17")],
    )
    def test_fmt(self, x, text):
        assert fmt(x) == text

    def test_twelve_significant_digits(self):
        assert fmt(2 ** 0.5) == "1.41421356237"


class TestGroundSweepCommand:
    def test_header_and_rows(self, tmp_path):
        out = tmp_path / "g.csv"
        assert main(["ground-sweep", "--steps", "21", "--out", str(out)]) == EXIT_OK
        data = out.read_bytes()
        assert b"\r" not in data
        rows = list(csv.reader(io.StringIO(data.decode("utf-8"))))
        assert rows[0] == ["c", "energy_numeric", "energy_closed", "concurrence_numeric", "concurrence_closed", "negativity_mixed"]
        assert len(rows) == 22

    def test_deterministic(self, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for p in paths:
            main(["ground-sweep", "--c-min", "-2", "--c-max", "2", "--steps", "41", "--out", str(p)])
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_jobs_do_not_change_output(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        main(["ground-sweep", "--steps", "15", "--out", str(a)])
        main(["ground-sweep", "--steps", "15", "--jobs", "2", "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_round_trip(self, tmp_path):
        out = tmp_path / "g.csv"
        main(["ground-sweep", "--c-min", "-3", "--c-max", "3", "--steps", "13", "--out", str(out)])
        series = ground_sweep(-3, 3, 13)
        with out.open() as fh:
            for row, (c, vals) in zip(csv.DictReader(fh), series.records):
                assert float(row["c"]) == pytest.approx(c, rel=1e-11, abs=1e-300)
                for k, v in vals.items():
                    assert float(row[k]) == pytest.approx(v, rel=1e-11, abs=1e-300)

    def test_stdout_default(self, capsys):
        code, out, _ = invoke(["ground-sweep", "--steps", "3"], capsys)
        assert code == EXIT_OK
        assert out.splitlines()[2].startswith("0,-1,-1,0.942809041582,0.942809041582,0.333333333333")


class TestThermalSweepCommand:
    def test_rows(self, capsys):
        code, out, _ = invoke(["thermal-sweep", "--temps", "0.05", "0.5", "--steps", "5"], capsys)
        assert code == EXIT_OK
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 10
        assert list(rows[0]) == ["t", "c", "negativity"]
        center = [r for r in rows if r["t"] == "0.5" and r["c"] == "0"]
        assert round(float(center[0]["negativity"]), 3) == 0.243

    def test_round_trip(self, capsys):
        _, out, _ = invoke(["thermal-sweep", "--temps", "0.2", "--c-min", "-1", "--c-max", "1", "--steps", "7"], capsys)
        series = thermal_sweep([0.2], -1, 1, 7)[0.2]
        for row, (_, vals) in zip(csv.DictReader(io.StringIO(out)), series.records):
            assert float(row["negativity"]) == pytest.approx(vals["negativity"], rel=1e-11)

    def test_bad_temperature(self, capsys):
        code, _, err = invoke(["thermal-sweep", "--temps", "-0.1"], capsys)
        assert code == EXIT_USAGE and "error" in err


class TestMeasureCommand:
    def test_thermal_point(self, capsys):
        code, out, _ = invoke(["measure", "--c", "0", "--t", "0.5"], capsys)
        assert code == EXIT_OK
        assert round(float(values(out)["negativity"]), 3) == 0.243

    def test_degenerate_point(self, capsys):
        _, out, _ = invoke(["measure", "--c", "0"], capsys)
        v = values(out)
        assert "negativity_mixed=0.333333333333" in out.splitlines()
        assert v["degeneracy"] == "2"
        assert float(v["ground_energy"]) == -1.0

    def test_nondegenerate_point(self, capsys):
        _, out, _ = invoke(["measure", "--c", "-1"], capsys)
        v = values(out)
        assert v["degeneracy"] == "1"
        assert float(v["concurrence"]) == pytest.approx(0.685994, abs=1e-6)
        assert "negativity" not in v

    def test_tesla_input_warns(self, capsys):
        code, out, err = invoke(["measure", "--b1", "0.001", "--b2", "0.001"], capsys)
        assert code == EXIT_OK
        assert "warning" in err
        v = values(out)
        assert float(v["c"]) > 0 > float(v["d"])

    def test_nonpositive_temperature(self, capsys):
        code, _, err = invoke(["measure", "--t", "0"], capsys)
        assert code == EXIT_USAGE and err


class TestCriticalTempCommand:
    def test_value(self, capsys):
        code, out, _ = invoke(["critical-temp", "--lo", "0.05", "--hi", "0.5", "--tol", "1e-4"], capsys)
        assert code == EXIT_OK
        v = values(out)
        assert float(v["t_c"]) == pytest.approx(0.107, abs=3e-3)
        assert float(v["bracket_low"]) < float(v["t_c"]) < float(v["bracket_high"])

    def test_no_sign_change_exit_code(self, capsys):
        code, _, err = invoke(["critical-temp", "--lo", "0.2", "--hi", "0.5"], capsys)
        assert code == EXIT_NUMERIC and "error" in err


class TestArgumentErrors:
    @pytest.mark.parametrize(
        "args",
        [
            ["ground-sweep", "--steps", "1"],
            ["ground-sweep", "--c-min", "2", "--c-max", "-2"],
            ["ground-sweep", "--jobs", "0"],
            ["critical-temp", "--lo", "0.5", "--hi", "0.05"],
        ],
    )
    def test_invalid_values(self, args, capsys):
        code, out, err = invoke(args, capsys)
        assert code == EXIT_USAGE and out == "" and err.startswith("error")

    @pytest.mark.parametrize("args", [[], ["bogus"], ["ground-sweep", "--steps", "x"]])
    def test_parse_errors(self, args):
        with pytest.raises(SystemExit) as exc:
            main(args)
        assert exc.value.code == EXIT_USAGE

    def test_unwritable_out(self, tmp_path):
        cfg = parse_config(["measure", "--out", str(tmp_path / "missing" / "x.txt")])
        assert run(cfg) == EXIT_USAGE


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hfentangle", "measure", "--c", "0"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert "negativity_mixed=0.333333333333" in proc.stdout
