import csv
import io
import json
import subprocess
import sys

import pytest

from diskzernike import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_csv(capsys):
    code, out, err = run(capsys, "table", "--j-list", "5,7,11")
    assert code == 0
    assert "\r" not in out
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["N"] for r in rows] == ["15", "19", "27"]
    assert rows[0]["egr0"] == ""
    assert float(rows[0]["rat0"]) == pytest.approx(3.1093560700018833e-05, rel=1e-12)
    assert "convention: cartesian" in err


def test_table_json_and_file(tmp_path, capsys):
    path = tmp_path / "t.json"
    code, out, _ = run(capsys, "table", "--j-list", "5,7", "--format", "json",
                       "--convention", "complex", "--out", str(path))
    assert code == 0 and out == ""
    data = json.loads(path.read_text())
    assert data["convention"] == "complex"
    assert len(data["rows"]) == 2


def test_table_compare_reference(capsys):
    code, _, err = run(capsys, "table", "--table1-defaults", "--compare-reference")
    assert code == 0
    assert "# cartesian: matches" in err
    assert "# complex: does not match" in err


def test_table_compare_needs_reference_parameters(capsys):
    code, _, err = run(capsys, "table", "--alpha", "1", "--j-list", "5", "--compare-reference")
    assert code == 2
    assert "reference comparison" in err


@pytest.mark.parametrize("argv", [
    ["table", "--j-list", "7,5"],
    ["table", "--l", "3", "--j-list", "2"],
    ["table", "--j-list", "5", "--table1-defaults"],
    ["table", "--alpha", "-1.5", "--j-list", "5"],
])
def test_bad_arguments_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_unparseable_list_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["table", "--j-list", "a,b"])
    assert exc.value.code == 2


def test_rate(capsys):
    code, out, err = run(capsys, "rate", "--degrees", "4,8,12")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["N"]) for r in rows] == [4, 8, 12]
    assert "fitted log-slope" in err


def test_rate_json(capsys):
    code, out, _ = run(capsys, "rate", "--function", "gaussian", "--degrees", "2,4",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["u_spec"] == "gaussian"


def test_markov(capsys):
    code, out, err = run(capsys, "markov", "--trials", "50", "--max-degree", "10")
    assert code == 0
    data = json.loads(out)
    assert data["trials"] == 50 and data["bernstein_holds"]
    assert "Bernstein bound holds" in err


def test_markov_csv(capsys):
    code, out, _ = run(capsys, "markov", "--trials", "5", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "trial,degree,ratio" and len(lines) == 6


def test_plot_data(capsys):
    code, out, _ = run(capsys, "plot-data", "--j-list", "5,7,11,19")
    assert code == 0
    header = out.splitlines()[0].split(",")
    assert header[0] == "N" and "rat3" in header and "ref3" in header
    assert len(out.splitlines()) == 5


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "diskzernike", "--help"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    for name in ("table", "verify", "rate", "markov", "plot-data"):
        assert name in res.stdout


def test_verify(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert out.count("[PASS]") == 10
    assert "all checks passed" in out
