import csv
import io
import json
import math
import subprocess
import sys

import pytest

from genbessel import cli
from genbessel.kzw import k_half_closed, khalf_series


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def run_sweep(*argv):
    code, text = run("sweep", *argv)
    rows = list(csv.reader(io.StringIO(text)))
    return code, rows[0], rows[1:]


class TestParsing:
    @pytest.mark.parametrize("text,value", [("0.5", 0.5), ("0.5+0.25i", 0.5 + 0.25j),
                                            ("-1e-3-2i", -1e-3 - 2j), ("3i", 3j), ("-2", -2)])
    def test_complex(self, text, value):
        assert cli.parse_complex(text) == value

    def test_bad_complex(self):
        with pytest.raises(cli.UsageError):
            cli.parse_complex("abc")

    @pytest.mark.parametrize("text,count", [("0.5:5:0.5", 10), ("-5:5:0.1", 101),
                                            ("25:200:25", 8), ("0:0.3:0.1", 4), ("1:1:1", 1)])
    def test_grid_inclusive(self, text, count):
        grid = cli.parse_grid(text)
        stop = float(text.split(":")[1])
        assert len(grid) == count and abs(grid[-1] - stop) <= 1e-12 * max(1, abs(stop))

    @pytest.mark.parametrize("text", ["1:2", "1:0:0.5", "1:2:0", "a:b:c"])
    def test_bad_grid(self, text):
        with pytest.raises(cli.UsageError):
            cli.parse_grid(text)


class TestEval:
    def test_khalf_w0_plain(self):
        code, text = run("eval", "khalf_series", "--w", "0", "--x", "1", "--output", "plain")
        assert code == 0
        fields = dict(line.split(" = ", 1) for line in text.strip().splitlines())
        assert float(fields["value"].split()[0]) == pytest.approx(math.sqrt(math.pi / 2) / math.e,
                                                                  rel=1e-14)
        assert fields["converged"] == "True"

    def test_contour_json_matches_series(self):
        code, text = run("eval", "kzw_contour", "--z", "0.5", "--w", "0.6", "--x", "1",
                         "--output", "json")
        assert code == 0
        doc = json.loads(text)
        assert set(doc) >= {"value_re", "value_im", "abs_err", "terms_used", "converged"}
        assert abs(doc["value_re"] - khalf_series(0.6, 1).value.real) <= 1e-8

    def test_voigt_cdf_median(self):
        code, text = run("eval", "voigt_cdf", "--sigma", "1", "--beta", "0.5", "--x0", "0",
                         "--output", "json")
        assert code == 0 and json.loads(text)["value_re"] == pytest.approx(0.5, abs=1e-10)

    def test_csv_header(self):
        code, text = run("eval", "zeta", "--s", "2", "--output", "csv")
        rows = list(csv.reader(io.StringIO(text)))
        assert code == 0 and rows[0] == ["value_re", "value_im", "abs_err", "terms", "converged"]
        assert float(rows[1][0]) == pytest.approx(math.pi ** 2 / 6, rel=1e-14)

    @pytest.mark.parametrize("argv", [
        ["eval", "hyp1f1", "--a", "0.5+0.25i", "--c", "1.5", "--z", "-1-2i"],
        ["eval", "hyp2f2", "--a1", "1", "--a2", "1", "--c1", "1.5", "--c2", "2", "--z", "0.25"],
        ["eval", "phi3", "--a", "0.5", "--c", "1.5", "--x", "0.3", "--y", "-0.2"],
        ["eval", "kzw_asymptotic", "--z", "0.5", "--w", "0.5", "--x", "50"],
        ["eval", "voigt_profile", "--sigma", "1", "--beta", "1", "--x", "-0.5"],
        ["eval", "faddeeva", "--y", "1+1i"],
        ["eval", "erf", "--w", "1"],
        ["eval", "erfi", "--w", "0.5i"],
        ["eval", "laguerre", "--n", "3", "--alpha", "-3.5", "--x", "1"],
    ])
    def test_every_target_runs(self, argv):
        code, text = run(*argv, "--output", "json")
        assert code == 0 and json.loads(text)["converged"] is True

    def test_json_round_trip(self):
        _, text = run("eval", "kzw_contour", "--z", "1.5", "--w", "0.5", "--x", "2", "--output", "json")
        doc = json.loads(text)
        assert json.dumps(doc) == text.strip()
        plain = run("eval", "kzw_contour", "--z", "1.5", "--w", "0.5", "--x", "2")[1]
        assert repr(doc["value_re"]) in plain

    def test_deterministic(self):
        argv = ["eval", "kzw_contour", "--z", "0.5", "--w", "0.9", "--x", "2.5", "--output", "json"]
        assert run(*argv) == run(*argv)


class TestExitCodes:
    @pytest.mark.parametrize("argv", [
        ["bogus"],
        ["eval", "not_a_target", "--x", "1"],
        ["eval", "khalf_series", "--w", "0"],                     # missing --x
        ["eval", "khalf_series", "--w", "zero", "--x", "1"],      # unparseable
        ["eval", "laguerre", "--n", "1.5", "--alpha", "0", "--x", "1"],
        ["check", "eta", "--a", "1.5", "--b", "2"],               # a*b far from pi^2
        ["sweep", "khalf_series", "--w", "0.5", "--x", "1"],      # no grid
        ["eval", "zeta", "--s", "2", "--output", "xml"],
    ])
    def test_usage_errors(self, argv, capsys):
        assert run(*argv)[0] == cli.EXIT_USAGE
        assert "usage:" in capsys.readouterr().err

    @pytest.mark.parametrize("argv", [
        ["eval", "zeta", "--s", "1"],
        ["eval", "hyp1f1", "--a", "0.5", "--c", "-2", "--z", "1"],
        ["eval", "khalf_series", "--w", "0.5", "--x", "-1"],
        ["check", "generalized_eta", "--w", "3", "--a", "3.141592653589793", "--b", "3.141592653589793"],
    ])
    def test_evaluation_failures(self, argv):
        assert run(*argv)[0] == cli.EXIT_EVAL

    def test_convergence_error_prints_partial(self, monkeypatch):
        monkeypatch.setenv("KZW_MAX_TERMS", "4")
        code, text = run("eval", "hyp1f1", "--a", "0.5", "--c", "1.5", "--z", "20", "--output", "json")
        assert code == cli.EXIT_EVAL
        doc = json.loads(text)
        assert doc["converged"] is False and doc["terms_used"] == 4

    def test_residual_above_tolerance(self):
        code, text = run("check", "lemma21", "--n", "2", "--x", "0.5", "--tol", "1e-18", "--output", "json")
        assert code == cli.EXIT_RESIDUAL and json.loads(text)["pass"] is False


class TestCheck:
    def test_eta_symmetric(self):
        code, text = run("check", "eta", "--a", "3.141592653589793", "--b", "3.141592653589793",
                         "--output", "json")
        doc = json.loads(text)
        assert code == 0 and doc["pass"] and doc["abs_residual"] <= 1e-12
        assert set(doc) == {"lhs", "rhs", "abs_residual", "rel_residual", "n_terms_lhs", "pass"}

    def test_generalized_eta_rounded_pair(self, capsys):
        code, text = run("check", "generalized_eta", "--w", "0.5", "--a", "1.5707963",
                         "--b", "6.2831853", "--tol", "1e-7", "--output", "json")
        assert code == 0 and json.loads(text)["pass"]
        assert "b = pi^2/a" in capsys.readouterr().err

    @pytest.mark.parametrize("argv", [
        ["check", "ramanujan_guinand", "--z", "3", "--a", "1.5707963267948966"],
        ["check", "generalized_ramanujan_guinand", "--z", "3", "--w", "0.5", "--b", "3.141592653589793"],
        ["check", "lemma21", "--n", "1", "--x", "1"],
        ["check", "theorem12", "--w", "0.6", "--x", "1"],
        ["lemma", "--n", "3", "--x", "2"],
    ])
    def test_passing_checks(self, argv):
        assert run(*argv, "--output", "csv")[0] == 0


class TestSweep:
    def test_khalf_rows(self):
        code, header, rows = run_sweep("khalf_series", "--w", "0.5", "--x", "0.5:5:0.5")
        assert code == 0 and header == ["param", "value_re", "value_im", "abs_err", "terms"]
        assert len(rows) == 10
        assert [float(r[0]) for r in rows] == pytest.approx([0.5 * k for k in range(1, 11)])

    def test_voigt_symmetric(self):
        code, _, rows = run_sweep("voigt_profile", "--sigma", "1", "--beta", "1", "--x", "-5:5:0.1")
        vals = [float(r[1]) for r in rows]
        assert code == 0 and len(rows) == 101
        assert all(abs(a - b) <= 1e-12 for a, b in zip(vals, vals[::-1]))

    def test_asymptotic_deviation_shrinks(self):
        _, _, rows = run_sweep("kzw_asymptotic", "--z", "0.5", "--w", "0.5", "--x", "25:200:25")
        devs = []
        for row in rows:
            x = float(row[0])
            if x in (25.0, 50.0, 100.0, 200.0):
                devs.append(abs(float(row[1]) - khalf_series(0.5, x).value.real)
                            / abs(k_half_closed(x)))
        assert len(devs) == 4 and all(b < a for a, b in zip(devs, devs[1:]))

    def test_failed_rows_are_nan(self):
        code, _, rows = run_sweep("khalf_series", "--w", "0.5", "--x", "-1:1:1")
        assert code == cli.EXIT_EVAL
        assert rows[0][1:] == ["NaN"] * 4 and rows[1][1:] == ["NaN"] * 4
        assert float(rows[2][1]) == pytest.approx(khalf_series(0.5, 1).value.real)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "genbessel", "eval", "erf", "--w", "1",
                           "--output", "json"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value_re"] == pytest.approx(math.erf(1), rel=1e-15)
