from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from wreathpat.cli import EXIT_BUDGET, EXIT_CHECK_FAILED, EXIT_USAGE, SCHEMA, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_sequence_one_value_per_line(capsys):
    code, out, _ = run(capsys, "sequence", "--k", "2", "--patterns", "1-2/0,1", "--n-max", "6")
    assert code == 0
    assert out.split() == ["2", "7", "34", "209", "1546", "13327"]


def test_count_csv(capsys):
    code, out, _ = run(capsys, "count", "--n", "3", "--k", "2", "--patterns", "1-2/0,1", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows == [{"n": "3", "k": "2", "count": "34"}]


def test_count_json_schema(capsys):
    code, out, _ = run(capsys, "count", "--n", "2", "--k", "2", "--patterns", "12/0,0", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == SCHEMA and doc["command"] == "count"
    assert doc["result"]["count"] == 6


def test_exact_mode_flag(capsys):
    _, out, _ = run(capsys, "count", "--n", "3", "--k", "2", "--patterns", "1-2/0,0", "--mode", "exact")
    assert out.strip() == "34"


def test_formula_cross_check_pass(capsys):
    code, out, _ = run(capsys, "formula", "--id", "cat", "--n", "3")
    assert code == 0 and out.splitlines()[0] == "14" and "PASS" in out


def test_formula_cross_check_fail(capsys):
    code, out, err = run(capsys, "formula", "--id", "falling", "--n", "3", "--k", "4")
    assert code == EXIT_CHECK_FAILED
    assert "FAIL" in out and "n=3 k=4" in err


def test_formula_no_check(capsys):
    code, out, _ = run(capsys, "formula", "--id", "falling", "--n", "3", "--k", "4", "--no-check", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["result"]["value"] == 64 and doc["result"]["verdict"] is None


def test_formula_list_json(capsys):
    code, out, _ = run(capsys, "formula", "--list", "--format", "json")
    ids = {e["id"] for e in json.loads(out)["result"]}
    assert code == 0 and {"mult", "signs-1", "upsilon-2", "falling", "mw-1", "cat"} <= ids


def test_distribution_csv_and_figure(capsys, tmp_path):
    fig = tmp_path / "dist.png"
    code, out, _ = run(capsys, "distribution", "--n", "3", "--k", "2", "--patterns", "1-2/0,0",
                       "--format", "csv", "--figure", str(fig))
    assert code == 0 and fig.exists()
    assert out.splitlines() == ["j,count", "0,20", "1,22", "2,4", "3,2"]


def test_series_fractions(capsys):
    code, out, _ = run(capsys, "series", "--kind", "pat2", "--n-max", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,coefficient,count", "0,1,1", "1,2,2", "2,7/2,7", "3,17/3,34"]


def test_series_ode_zero(capsys):
    code, out, _ = run(capsys, "series", "--kind", "ode", "--n-max", "15", "--format", "json")
    assert code == 0 and set(json.loads(out)["result"]["coefficients"]) == {"0"}


def test_bijection_element(capsys, tmp_path):
    fig = tmp_path / "b.png"
    code, out, _ = run(capsys, "bijection", "--element", "sigma=6,5,7,4,3,1,2 colors=1,1,0,1,0,1,0",
                       "--figure", str(fig))
    assert code == 0 and fig.exists()
    assert "DDDRDRRRDDRDDRRR" in out and "UUUDUDDDUUDUUDDD" in out


def test_bijection_listing_and_certify(capsys):
    code, out, _ = run(capsys, "bijection", "--n", "2", "--format", "json")
    assert code == 0 and len(json.loads(out)["result"]) == 5
    code, out, _ = run(capsys, "bijection", "--certify", "5")
    assert code == 0 and "PASS" in out


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "count", "--n", "9", "--k", "3", "--patterns", "1-2/0,0", "--budget", "1000")
    assert code == EXIT_BUDGET and "budget" in err


def test_bad_pattern_exit_code(capsys):
    code, _, err = run(capsys, "count", "--n", "2", "--k", "2", "--patterns", "1-1/0,0")
    assert code == EXIT_USAGE and "error" in err


def test_unknown_formula(capsys):
    code, _, err = run(capsys, "formula", "--id", "nope", "--n", "2")
    assert code == EXIT_USAGE and "known ids" in err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["count", "--k", "2"])
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "wreathpat", "count", "--n", "2", "--k", "1", "--patterns", "2-1/0,0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
