import json
import math

import pytest

from geomprod.cli import parse_base, parse_function, parse_ratio, run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFlagParsing:
    def test_sqrt_ratio(self):
        assert parse_ratio("sqrt:2") == math.sqrt(2.0)
        assert parse_ratio("1.5") == 1.5

    def test_base(self):
        assert parse_base("4,2").elements == (2, 4)

    def test_function_specs(self):
        assert parse_function("cos").tag == "cos"
        f = parse_function("exp_scaled:-1.5")
        assert f.tag == "exp_scaled" and f.c == -1.5
        g = parse_function("monomial_exp:0.5,3")
        assert g.c == 0.5 and g.k == 3
        with pytest.raises(ValueError):
            parse_function("tan")


class TestEstimateCommand:
    def test_fig1_point(self, capsys):
        code, out, _ = invoke(
            capsys,
            "estimate", "--function", "cos", "--x", "1.0", "--r", "sqrt:2",
            "--n-max", "10", "--base", "2,4", "--parity", "even",
        )
        assert code == 0
        record = json.loads(out)
        assert record["value"] == pytest.approx(math.cos(1.0), abs=0.01)
        assert record["config"]["n_max"] == 10
        assert record["config"]["base"] == [2, 4]

    def test_cutoff_resolution_embedded(self, capsys):
        code, out, _ = invoke(
            capsys,
            "estimate", "--function", "cos", "--x", "1.0", "--r", "sqrt:2",
            "--cutoff", "32", "--base", "2,4", "--parity", "even",
        )
        assert code == 0
        assert json.loads(out)["config"]["n_max"] == 10

    def test_deterministic(self, capsys):
        argv = ["estimate", "--function", "half_sin_shifted", "--x", "2.0",
                "--r", "2", "--n-max", "40", "--base", "1,2,3,4"]
        _, out1, _ = invoke(capsys, *argv)
        _, out2, _ = invoke(capsys, *argv)
        assert out1 == out2

    def test_missing_truncation_is_usage_error(self, capsys):
        code, _, err = invoke(
            capsys,
            "estimate", "--function", "cos", "--x", "1", "--r", "2", "--base", "2",
        )
        assert code == 2
        assert "error" in err


class TestComponentCommand:
    def test_exp_component(self, capsys):
        code, out, _ = invoke(
            capsys,
            "component", "--function", "exp_scaled:1", "--k", "1", "--x", "1.0",
            "--r", "2", "--n-max", "20", "--base", "1",
        )
        assert code == 0
        record = json.loads(out)
        assert record["value"] == pytest.approx(math.exp(1 - 2.0**-20), rel=1e-12)
        assert record["k"] == 1

    def test_k_outside_base(self, capsys):
        code, _, err = invoke(
            capsys,
            "component", "--function", "cos", "--k", "3", "--x", "1", "--r", "2",
            "--n-max", "10", "--base", "2,4",
        )
        assert code == 2


class TestEulerCommand:
    def test_half_pi(self, capsys):
        code, out, _ = invoke(capsys, "euler", "--x", "1.5707963", "--n", "40")
        assert code == 0
        record = json.loads(out)
        assert record["product"] == pytest.approx(2 / math.pi, abs=1e-6)
        assert record["abs_error"] < 1e-10


class TestCountFactorsCommand:
    def test_fig2_count(self, capsys):
        code, out, _ = invoke(
            capsys, "count-factors", "--base", "1,2,3,4", "--n-max", "40",
        )
        assert code == 0
        assert out.strip() == "135750"

    def test_json_format(self, capsys):
        code, out, _ = invoke(
            capsys, "count-factors", "--base", "2,4", "--n-max", "10",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["factor_count"] == 65


class TestSweepCommand:
    ARGV = ("sweep", "--function", "cos", "--grid", "0:1.5:0.5",
            "--schedule", "sqrt:2", "--n-max", "10", "--base", "2,4",
            "--parity", "even")

    def test_csv_output(self, capsys):
        code, out, _ = invoke(capsys, *self.ARGV)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "x,r,n_max,estimate,reference,abs_error,factor_count,status"
        assert len(lines) == 5

    def test_byte_identical_runs(self, capsys):
        _, out1, _ = invoke(capsys, *self.ARGV)
        _, out2, _ = invoke(capsys, *self.ARGV)
        assert out1 == out2

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "sweep.csv"
        code, out, _ = invoke(capsys, *self.ARGV, "--output", str(target))
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("x,r,n_max,")


class TestForecastCommand:
    def write_series(self, tmp_path):
        path = tmp_path / "series.csv"
        rows = ["t,value"]
        for i in range(81):
            t = 0.05 * i
            rows.append(f"{t},{1 + 0.5 * math.sin(t)}")
        path.write_text("\n".join(rows), encoding="utf-8")
        return path

    def test_forecast(self, capsys, tmp_path):
        path = self.write_series(tmp_path)
        code, out, _ = invoke(
            capsys,
            "forecast", "--csv", str(path), "--normalize", "none", "--x", "3.0",
            "--r", "2", "--n-max", "40", "--base", "1,2,3,4",
        )
        assert code == 0
        record = json.loads(out)
        assert record["raw_value"] == pytest.approx(1 + 0.5 * math.sin(3.0), abs=0.01)
        assert record["coverage"]["ok"] is True

    def test_domain_error_exit_code(self, capsys, tmp_path):
        path = self.write_series(tmp_path)
        code, _, err = invoke(
            capsys,
            "forecast", "--csv", str(path), "--normalize", "none", "--x", "50",
            "--r", "2", "--n-max", "40", "--base", "1,2,3,4",
        )
        assert code == 3
        assert "DomainCoverageError" in err

    def test_json_error_object(self, capsys, tmp_path):
        path = self.write_series(tmp_path)
        code, out, err = invoke(
            capsys,
            "forecast", "--csv", str(path), "--normalize", "none", "--x", "50",
            "--r", "2", "--n-max", "40", "--base", "1,2,3,4", "--format", "json",
        )
        assert code == 3
        assert json.loads(out)["error"]["type"] == "DomainCoverageError"
        assert err.count("\n") == 1  # single-line reason

    def test_missing_file_is_io_error(self, capsys, tmp_path):
        code, _, err = invoke(
            capsys,
            "forecast", "--csv", str(tmp_path / "absent.csv"), "--x", "1",
            "--r", "2", "--n-max", "10", "--base", "1",
        )
        assert code == 4

    def test_malformed_file_is_io_error(self, capsys, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("0,1\nnot,a,row\n", encoding="utf-8")
        code, _, err = invoke(
            capsys,
            "forecast", "--csv", str(path), "--x", "1",
            "--r", "2", "--n-max", "10", "--base", "1",
        )
        assert code == 4
