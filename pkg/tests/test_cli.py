import csv
import io
import json
import subprocess
import sys

import pytest

from bessel_radii import cli
from bessel_radii.verify import SuiteResult


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv", [
    ["eval", "--z", "1.3"],
    ["eval", "--kind", "h", "--z", "0.7", "--nu", "3.5", "--n", "2"],
    ["zeros", "--which", "Theta", "--count", "4", "--nu", "3.5", "--n", "1"],
    ["radius", "--kind", "g", "--property", "convex", "--nu", "3.5", "--n", "1", "--beta", "0.5"],
    ["radius", "--kind", "f", "--nu", "0.5", "--n", "1"],
    ["bounds", "--target", "starlike-h", "--nu", "1.5", "--n", "2"],
    ["sums", "--family", "kappa", "--nu", "2.5", "--n", "1", "--numeric", "--count", "50"],
])
def test_json_round_trip_is_byte_identical(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    line = out.rstrip("\n")
    assert json.dumps(json.loads(line), sort_keys=True) == line
    env = json.loads(line)
    assert set(env) >= {"command", "params", "result", "bracket", "residual", "warnings"}
    assert set(env["params"]) == {"nu", "n", "beta"}


def test_twelve_significant_digits(capsys):
    _, out, _ = run(capsys, "radius", "--kind", "f", "--format", "json")
    value = json.loads(out)["result"]
    assert value == float(f"{value:.12g}")
    assert value == pytest.approx(3.6328, abs=1e-3)


def _numbers(row):
    out = {}
    for k, v in row.items():
        try:
            out[k] = float(v)
        except (TypeError, ValueError):
            pass
    return out


@pytest.mark.parametrize("argv,key", [
    (["radius", "--kind", "h", "--nu", "2.5"], "radius"),
    (["eval", "--kind", "g", "--z", "2.2", "--nu", "2.5", "--n", "1"], "value"),
])
def test_csv_and_json_carry_the_same_value(capsys, argv, key):
    _, js, _ = run(capsys, *argv, "--format", "json")
    _, cs, _ = run(capsys, *argv, "--format", "csv")
    assert cs.endswith("\r\n")
    rows = list(csv.DictReader(io.StringIO(cs)))
    assert len(rows) == 1
    assert float(rows[0][key]) == json.loads(js)["result"]


def test_csv_zeros_match_json(capsys):
    argv = ["zeros", "--nu", "2.5", "--n", "2", "--count", "6"]
    _, js, _ = run(capsys, *argv, "--format", "json")
    _, cs, _ = run(capsys, *argv, "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(cs)))
    assert [float(r["zero"]) for r in rows] == json.loads(js)["result"]


def test_h_radius_conversion(capsys):
    _, plain, _ = run(capsys, "radius", "--kind", "h", "--format", "json")
    _, conv, _ = run(capsys, "radius", "--kind", "h", "--bessel-argument", "--format", "json")
    x, z = json.loads(plain)["result"], json.loads(conv)["result"]
    assert x == pytest.approx(11.1696, abs=1e-3)
    assert z == pytest.approx(x ** 0.5, rel=1e-11)
    assert any("variable of h" in w for w in json.loads(plain)["warnings"])


def test_table_flags_anomaly(capsys):
    code, out, _ = run(capsys, "table", "--which", "2", "--format", "json")
    assert code == 0
    cells = json.loads(out)["result"]
    assert len(cells) == 24
    flagged = [c for c in cells if c["anomaly"]]
    assert [(c["kind"], c["n"], c["beta"]) for c in flagged] == [("g", 0, 0.0)]
    h3 = next(c for c in cells if (c["kind"], c["n"], c["beta"]) == ("h", 3, 0.5))
    assert h3["computed"] == pytest.approx(0.4968, abs=1e-3) and h3["deviation"] < 1e-3
    assert all(c["matches"] for c in cells if not c["anomaly"])


def test_table_text_renders_four_decimals(capsys):
    code, out, _ = run(capsys, "table", "--which", "1")
    assert code == 0
    assert "3.6328/3.6328" in out


@pytest.mark.parametrize("argv", [
    ["radius", "--kind", "f", "--nu", "2", "--n", "2"],        # nu = n
    ["radius", "--kind", "g", "--nu", "0.5", "--n", "2"],      # nu <= n - 1
    ["radius", "--kind", "q"],
    ["eval", "--z", "1", "--rel-tol", "-1"],
    ["zeros", "--count", "0"],
    ["bounds", "--target", "convex-f"],
    ["verify", "--grid-nu", "-2"],
    ["verify", "--grid-nu", "x"],
    ["eval"],
])
def test_invalid_input_exit_2_with_error_object(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert "type" in json.loads(err)["error"]


def test_numeric_failure_exit_3(capsys):
    code, _, err = run(capsys, "eval", "--kind", "g", "--z", "5", "--max-terms", "2")
    assert code == 3
    assert json.loads(err)["error"]["type"] == "NonConvergence"


def test_verify_small_grid(capsys):
    code, out, _ = run(capsys, "verify", "--grid-nu", "2.5", "--format", "json")
    assert code == 0
    env = json.loads(out)
    assert env["params"] == {"grid_nu": [2.5]}
    assert all(s["failures"] == [] for s in env["result"].values())


def test_verify_failure_exit_4(capsys, monkeypatch):
    monkeypatch.setattr(cli, "run_verify", lambda grid: [SuiteResult("fake", 0, ["broken"])])
    code, out, _ = run(capsys, "verify")
    assert code == 4 and "FAIL" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bessel_radii", "eval", "--z", "1.3"],
                          capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0 and proc.stdout.startswith("J(")
