import json
import subprocess
import sys

import pytest

from qaddform.cli import main, number
from qaddform.polyfam import big_qjacobi_value
from fractions import Fraction


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def records(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_eval_chebyshev(capsys):
    assert run(capsys, "eval", "chebyshev", "2") == (0, "2x^2 - 1\n", "")


def test_eval_qlaguerre_degree_zero(capsys):
    code, out, _ = run(capsys, "eval", "qlaguerre", "0", "--s", "1", "--t", "1", "--q", "1/2")
    assert code == 0 and out.strip() == "1"


def test_eval_big_q_jacobi_value(capsys):
    code, out, _ = run(capsys, "eval", "bigqjacobi", "1", "--alpha", "0", "--beta", "0", "--c", "1", "--d", "1",
                       "--q", "1/2", "--x", "1/4")
    oracle = big_qjacobi_value(1, 0, 0, Fraction(1, 4), Fraction(1), Fraction(1), Fraction(1, 2))
    assert code == 0 and Fraction(out.strip()) == oracle


def test_eval_float_mode(capsys):
    code, out, _ = run(capsys, "eval", "pjacobi", "2", "--s", "2", "--t", "1.5", "--q", "0.5", "--x", "0.3")
    assert code == 0 and float(out) == pytest.approx(-0.78095111336878, rel=1e-10)


def test_eval_float_point_with_exact_surd_coefficients(capsys):
    # rational parameters give coefficients in Q(sqrt q); a float x must still work
    base = ("eval", "qlaguerre", "2", "--alpha", "1", "--s", "1/2", "--t", "1/3", "--q", "1/2")
    code, out, _ = run(capsys, *base, "--x", "0.4")
    assert code == 0
    assert float(out) == pytest.approx(7883 / 7200 + 23 / 5 * 0.5 ** 0.5, rel=1e-14)


def test_eval_jacobi_and_aw(capsys):
    assert run(capsys, "eval", "jacobiR", "2")[1].strip() == "3/2 x^2 - 1/2"
    code, out, _ = run(capsys, "eval", "aw", "1", "--a", "1/2", "--b", "1/3", "--c", "0", "--d", "0", "--q", "1/2")
    assert code == 0 and out.strip() == "2x - 5/6"


def test_eval_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "nope", "2"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "eval", "pjacobi", "2", "--s", "1")
    assert code == 2 and "missing" in err


def test_number_parsing():
    assert number("3/4") == Fraction(3, 4)
    assert number("2") == Fraction(2)
    assert isinstance(number("0.5"), float)


def test_verify_thm41_l0(capsys):
    code, out, _ = run(capsys, "verify", "thm41", "--l", "0", "--m", "3", "--p", "1", "--q", "1/2", "--s", "1",
                       "--t", "1", "--exact")
    recs = records(out)
    assert code == 0
    assert "header" in recs[0]
    assert recs[1]["id"] == "thm41.exact" and recs[1]["pass"] is True


def test_exact_mode_refuses_floats(capsys):
    code, _, err = run(capsys, "verify", "thm41", "--l", "1", "--m", "1", "--p", "1", "--q", "0.5", "--s", "1",
                       "--t", "1", "--exact")
    assert code == 2 and "p/q" in err


def test_verify_identities(capsys):
    code, out, _ = run(capsys, "verify", "ncalg-identities")
    recs = records(out)[1:]
    assert code == 0 and len(recs) == 22 and all(r["pass"] for r in recs)


def test_verify_output_is_byte_identical(capsys, tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"r{k}.jsonl"
        assert run(capsys, "verify", "cor51", "--l", "2", "--m", "1", "--n", "1", "--p", "1", "--out", str(path))[0] == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_failure_exit_code(capsys):
    code, out, err = run(capsys, "ncalg", "verify", "a*b", "b*a")
    assert code == 1 and "ncalg.user" in err
    assert records(out)[1]["pass"] is False


def test_ncalg_eval_and_parse_error(capsys):
    code, out, _ = run(capsys, "ncalg", "eval", "d*a")
    assert code == 0 and "b*g" in out
    code, _, err = run(capsys, "ncalg", "eval", "rho[tau,")
    assert code == 2 and "^" in err


def test_repr_check_and_csv(capsys, tmp_path):
    csv = tmp_path / "r.csv"
    code, out, _ = run(capsys, "repr", "check", "--suite", "spectrum", "--csv", str(csv))
    assert code == 0
    assert records(out)[1]["id"] == "repr.spectrum"
    assert csv.read_text().startswith("id,params")


def test_limits_scan(capsys, tmp_path):
    out_json, out_csv = tmp_path / "s.json", tmp_path / "s.csv"
    code, _, _ = run(capsys, "limits", "scan", "--l", "2", "--c", "1/2", "--r", "1", "--m", "8,16,32",
                     "--out", str(out_json), "--csv", str(out_csv))
    assert code == 0
    rec = json.loads(out_json.read_text())
    assert rec["pass"] is True and [p["m"] for p in rec["params"]["points"]] == [8, 16, 32]
    assert len(out_csv.read_text().splitlines()) == 4


def test_report_command(capsys, tmp_path):
    path = tmp_path / "r.jsonl"
    run(capsys, "verify", "ncalg-identities", "--out", str(path))
    code, out, _ = run(capsys, "report", str(path))
    assert code == 0 and json.loads(out)["total"] == 22
    assert run(capsys, "report", str(tmp_path / "missing.jsonl"))[0] == 2


def test_grid_file(capsys, tmp_path):
    grid = tmp_path / "g.csv"
    grid.write_text("l,m,p,q,s,t\n1,1,1,1/2,2,3/2\n2,0,1,2/3,1,1\n")
    code, out, _ = run(capsys, "verify", "suite", "--grid", str(grid))
    assert code == 0 and len(records(out)) == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qaddform", "eval", "chebyshev", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "4x^3 - 3x"
