import csv
import json
import subprocess
import sys

import pytest

from fracqm.cli import main


def write(tmp_path, cfg, name="cfg.json"):
    p = tmp_path / name
    p.write_text(cfg if isinstance(cfg, str) else json.dumps(cfg))
    return p


def rows(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


WELL = {"kind": "well_consistency",
        "parameters": {"a": 1.0, "beta": 1.5, "D": 1.0, "n": [1, 2], "alpha": [0.0, 1.5],
                       "x_grid": {"start": -0.8, "stop": 0.8, "count": 5},
                       "check_refinement": False}}


def test_well_consistency_run(tmp_path, capsys):
    cfg = write(tmp_path, WELL)
    assert main(["run", str(cfg), "--output", str(tmp_path / "out")]) == 0
    table = rows(tmp_path / "out.csv")
    assert len(table) == 2 * 2 * 5
    summary = json.loads((tmp_path / "out.json").read_text())
    assert summary["all_converged"] and summary["rows"] == 20
    assert summary["inputs"]["parameters"]["n"] == [1, 2]
    assert "20 rows" in capsys.readouterr().out


def test_default_output_prefix(tmp_path):
    cfg = write(tmp_path, {"kind": "effective_potential",
                           "parameters": {"a": 1, "beta": 1.5, "D": 1, "m": 1, "n": [1, 3]}},
                "veff.json")
    assert main(["run", str(cfg)]) == 0
    table = rows(tmp_path / "veff_report.csv")
    assert abs(float(table[0]["veff"]) - 0.7350006930791326) < 1e-15
    assert abs(float(table[1]["veff"]) + 0.8736332167067768) < 1e-15


def test_values_round_trip_at_full_precision(tmp_path):
    cfg = write(tmp_path, {"kind": "specfun_eval", "parameters": {"evaluations": [
        {"function": "ml", "alpha": 1.0, "z": 1.0},
        {"function": "gamma", "z": [0.5, 0.0]}]}})
    assert main(["run", str(cfg), "--output", str(tmp_path / "s")]) == 0
    table = rows(tmp_path / "s.csv")
    assert float(table[0]["re"]) == 2.718281828459045
    assert float(table[1]["re"]) == 1.7724538509055159


def test_free_particle_and_pv_kinds(tmp_path):
    fp = write(tmp_path, {"kind": "free_particle", "parameters": {
        "alpha": 0.6, "beta": 2.0, "xs": [0.5, 1.0], "ts": [1.0],
        "methods": ["momentum_integral", "foxh"]}}, "fp.json")
    assert main(["run", str(fp), "--output", str(tmp_path / "fp")]) == 0
    assert len(rows(tmp_path / "fp.csv")) == 4
    pv = write(tmp_path, {"kind": "pv_eval", "parameters": {"integrals": [
        {"power": 0, "poles": [-1, 1], "oscillation": [[1.0, 1.0, "cos"]]}]}}, "pv.json")
    assert main(["run", str(pv), "--output", str(tmp_path / "pv")]) == 0
    assert abs(float(rows(tmp_path / "pv.csv")[0]["re"]) + 2.6435590640814303) < 1e-9


def test_validate_suite_run(tmp_path):
    cfg = write(tmp_path, {"kind": "validate_suite", "parameters": {"checks": ["gamma", "fox_h"]}})
    assert main(["run", str(cfg), "--output", str(tmp_path / "v")]) == 0
    table = rows(tmp_path / "v.csv")
    assert [r["check"] for r in table] == ["gamma", "fox_h"]
    assert all(r["passed"] == "true" for r in table)
    summary = json.loads((tmp_path / "v.json").read_text())
    assert summary["all_converged"]


def test_malformed_json_reports_line(tmp_path, capsys):
    cfg = write(tmp_path, '{\n  "kind": "pv_eval",\n  "parameters": {,}\n}')
    assert main(["run", str(cfg)]) == 1
    assert "line 3" in capsys.readouterr().err


@pytest.mark.parametrize("params,field", [
    ({"a": -1.0, "n": 1, "alpha": 1.5, "xs": [0.0]}, "a"),
    ({"a": 1.0, "n": 1, "alpha": 2.5, "xs": [0.0]}, "alpha"),
    ({"a": 1.0, "n": 0, "alpha": 1.5, "xs": [0.0]}, "n"),
    ({"a": 1.0, "alpha": 1.5, "xs": [0.0]}, "n"),
])
def test_invalid_parameters_name_the_field(tmp_path, capsys, params, field):
    cfg = write(tmp_path, {"kind": "well_consistency", "parameters": params})
    assert main(["run", str(cfg)]) == 1
    assert field in capsys.readouterr().err
    assert not list(tmp_path.glob("*.csv"))


def test_unknown_kind(tmp_path, capsys):
    assert main(["run", str(write(tmp_path, {"kind": "nope"}))]) == 1
    assert "kind" in capsys.readouterr().err


def test_eval_values(capsys):
    assert main(["eval", "veff", "--a", "1", "--n", "1", "--beta", "1.5", "--d", "1",
                 "--m", "1"]) == 0
    assert capsys.readouterr().out.startswith("0.73500")
    assert main(["eval", "ml", "--alpha", "1", "--re", "1"]) == 0
    assert capsys.readouterr().out.startswith("2.718281828")
    assert main(["eval", "energy", "--a", "1", "--n", "2", "--beta", "1.5", "--d", "1"]) == 0
    assert abs(float(capsys.readouterr().out.split()[0]) - 5.56833) < 5e-6
    assert main(["eval", "pv", "--poles=-1,1", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert abs(out["value"] + 2.6435590640814303) < 1e-9 and out["converged"]


def test_eval_foxh_inline_params(capsys):
    spec = json.dumps({"m": 1, "n": 1, "upper": [[0, 1]], "lower": [[0, 1], [0, 0.5]]})
    assert main(["eval", "foxh", "--params", spec, "--z", "1.0", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    # H^{1,1}_{1,2}(z | (0,1); (0,1),(0,1/2)) = E_{1/2}(-z)
    v = out["value"]
    assert abs(v["re"] - 0.42758357615580700441) < 1e-10 and abs(v["im"]) < 1e-12


def test_eval_missing_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "ml", "--re", "1"])
    assert exc.value.code == 1
    assert "--alpha" in capsys.readouterr().err


def test_thread_count_does_not_change_output(tmp_path, monkeypatch):
    cfg = write(tmp_path, WELL)
    out = {}
    for threads in ("1", "3"):
        monkeypatch.setenv("FRACQM_THREADS", threads)
        assert main(["run", str(cfg), "--output", str(tmp_path / threads)]) == 0
        out[threads] = (tmp_path / f"{threads}.csv").read_bytes()
    assert out["1"] == out["3"]


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "fracqm.cli", "eval", "gamma", "--re", "5"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0
    assert r.stdout.split()[0] == "24.0"
