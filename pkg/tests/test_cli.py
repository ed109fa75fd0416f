import json
import subprocess
import sys

import pytest

from bohrradii.cli import main, parse_csv, parse_fraction, render_csv, render_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("--kind", "refined-rk", "--k", "2"), "0.674837"),
        (("--kind", "paulsen-rk", "--k", "11"), "0.918911"),
        (("--kind", "refined-rho", "--k", "35", "--a", "0.666666666667"), "0.927788"),
        (("--kind", "refined-rho", "--k", "35", "--a", "2/3"), "0.927788"),
    ],
)
def test_radius(capsys, argv, expected):
    code, out, _ = run(capsys, "radius", *argv)
    assert code == 0
    assert out.splitlines()[0] == expected


def test_radius_json_fields(capsys):
    code, out, _ = run(capsys, "radius", "--kind", "refined-rho", "--k", "2", "--a", "1/2",
                       "--format", "json")
    [row] = json.loads(out)
    assert set(row) == {"kind", "k", "a", "root", "residual", "bracket_width"}
    assert row["a"] == 0.5 and row["kind"] == "refined-rho"


def test_radius_usage_errors(capsys):
    assert run(capsys, "radius", "--kind", "refined-rho", "--k", "2")[0] == 2
    assert run(capsys, "radius", "--kind", "refined-sk", "--k", "0")[0] == 2
    assert run(capsys, "radius", "--kind", "refined-rho", "--k", "2", "--a", "3/2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["radius", "--kind", "nope", "--k", "2"])
    assert exc.value.code == 2


@pytest.mark.parametrize("which", ["t1", "t2", "t3", "t4a", "t4b", "t4c", "t4d"])
def test_table_diff(capsys, which):
    code, out, err = run(capsys, "table", "--which", which, "--diff")
    assert code == 0
    assert f"{which}: 20/20 match" in err
    assert out.count("| yes |") == 20


def test_table_single_row(capsys):
    code, out, _ = run(capsys, "table", "--which", "t2", "--k", "2")
    rows = [l for l in out.splitlines() if l.startswith("| refined")]
    assert len(rows) == 1 and "| 0.674837 |" in rows[0]


def test_table_out_file(capsys, tmp_path):
    path = tmp_path / "t3.csv"
    code, out, _ = run(capsys, "table", "--which", "t3", "--format", "csv", "--out", str(path))
    assert code == 0 and out == ""
    assert len(parse_csv(path.read_text())) == 20


def test_json_csv_round_trip(capsys):
    _, out, _ = run(capsys, "table", "--which", "t4c", "--format", "json")
    rows = json.loads(out)
    csv_text = render_csv(rows)
    back = parse_csv(csv_text)
    for a, b in zip(rows, back):
        for key, v in a.items():
            if isinstance(v, float):
                assert float(f"{v:.15g}") == float(f"{b[key]:.15g}")
            else:
                assert v == b[key]
    assert render_csv(json.loads(render_json(back))) == csv_text


def test_verify_th1(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "th1", "--k", "2", "--count", "500",
                       "--seed", "42")
    assert code == 0 and "violations:      0" in out


def test_verify_cor1(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "cor1", "--k", "3", "--count", "200",
                       "--seed", "3")
    assert code == 0 and "PASS" in out


def test_verify_th3_witness(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "th3", "--k", "2", "--a", "0.70710678",
                       "--count", "100", "--seed", "9")
    assert code == 0
    assert "equality witness: r = 0.618034" in out


def test_verify_classical_json(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "classical", "--count", "100",
                       "--format", "json")
    [rep] = json.loads(out)
    assert code == 0 and rep["violations"] == 0 and rep["radius_used"] == pytest.approx(1 / 3)


def test_verify_usage(capsys):
    assert run(capsys, "verify", "--theorem", "th3", "--k", "2")[0] == 2
    assert run(capsys, "verify", "--theorem", "th1")[0] == 2


def test_parse_fraction():
    assert parse_fraction("5/6") == pytest.approx(5 / 6)
    assert parse_fraction(" 0.75 ") == 0.75


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bohrradii", "radius", "--kind", "refined-sk",
                           "--k", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("0.585786")
