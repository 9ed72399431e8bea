import csv
import subprocess
import sys

import pytest

from jacobicross.cli import UsageError, main, parse_schedule, parse_target
from jacobicross.asymptotics import CutLocus, DistanceSphere


def run_cli(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def last_line(text):
    return text.rstrip("\n").splitlines()[-1]


def read_csv(path):
    raw = path.read_bytes()
    assert b"\r" not in raw
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


# examples

def test_eval_endpoint(capsys):
    code, out, _ = run_cli(capsys, "eval", "--alpha", "1", "--beta", "0", "--degree", "3", "--x", "-1")
    assert code == 0
    assert float(out.splitlines()[0]) == -1.0
    assert last_line(out) == "RESULT: PASS"


def test_verify_identity_circle(capsys):
    code, out, _ = run_cli(
        capsys, "verify-identity", "--alpha", "-0.5", "--beta", "-0.5", "--x", "0", "--m-schedule", "1000", "--tol", "3e-3"
    )
    assert code == 0
    assert last_line(out) == "RESULT: PASS"


def test_verify_cutlocus_cp3(capsys):
    code, out, _ = run_cli(capsys, "verify-cutlocus", "--space", "cp:3", "--m-schedule", "1000", "--tol", "1e-2")
    assert code == 0
    assert last_line(out) == "RESULT: PASS"


def test_spaces_lists_catalog(capsys):
    code, out, _ = run_cli(capsys, "spaces")
    assert code == 0
    for name in ("sphere:1", "sphere:3", "cp:2", "cp:3", "hp:2", "cap2"):
        assert name in out
    assert last_line(out) == "RESULT: PASS"


# tolerance failures

def test_identity_failure_line(capsys):
    code, out, _ = run_cli(
        capsys, "verify-identity", "--alpha", "-0.5", "--beta", "-0.5", "--x", "0", "--m-schedule", "1000", "--tol", "1e-6"
    )
    assert code == 1
    line = last_line(out)
    assert line.startswith("RESULT: FAIL rel_err=")
    fields = dict(tok.split("=") for tok in line.split()[2:])
    assert float(fields["tol"]) == 1e-6
    assert float(fields["rel_err"]) == pytest.approx(1 / 1000, rel=1e-9)


def test_cutlocus_failure(capsys):
    code, out, _ = run_cli(capsys, "verify-cutlocus", "--space", "cap2", "--m-schedule", "100", "--tol", "1e-3")
    assert code == 1
    assert last_line(out).startswith("RESULT: FAIL")


# usage and domain errors

@pytest.mark.parametrize(
    "argv",
    [
        ["verify-cutlocus", "--space", "xp:2", "--m-schedule", "100"],
        ["verify-cutlocus", "--space", "sphere:2", "--m-schedule", "100"],
        ["verify-cutlocus", "--space", "cp:1", "--m-schedule", "100"],
        ["verify-identity", "--alpha", "1", "--beta", "0", "--x", "1", "--m-schedule", "100"],
        ["verify-identity", "--alpha", "1", "--beta", "0", "--x", "0.2", "--m-schedule", "100,50"],
        ["verify-identity", "--alpha", "1", "--beta", "0", "--x", "0.2", "--m-schedule", "abc"],
        ["verify-identity", "--space", "cp:2", "--alpha", "1", "--beta", "0", "--x", "0.2", "--m-schedule", "10"],
        ["verify-identity", "--x", "0.2", "--m-schedule", "10"],
        ["eval", "--alpha", "-1", "--beta", "0", "--degree", "3", "--x", "0"],
        ["kuznecov", "--space", "sphere:2", "--target", "sphere:9", "--t-max", "100"],
        ["kuznecov", "--space", "sphere:2", "--target", "cutlocus", "--t-max", "100"],
        ["kuznecov", "--space", "cp:2", "--target", "ball:1", "--t-max", "100"],
        ["orthogonality", "--alpha", "0", "--beta", "0", "--max-degree", "10", "--nodes", "5"],
        ["orthogonality", "--alpha", "0", "--beta", "0", "--max-degree", "10", "--nodes", "5000"],
        ["normalization", "--space", "hp:1", "--max-degree", "3"],
        ["frobnicate"],
    ],
)
def test_exit_two_with_one_line_diagnostic(capsys, argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 2
    lines = err.strip("\n").splitlines()
    assert len(lines) == 1 and lines[0].startswith("error:")
    assert "RESULT" not in out


# CSV contract

def test_identity_csv(tmp_path, capsys):
    path = tmp_path / "id.csv"
    code, _, _ = run_cli(
        capsys, "verify-identity", "--space", "cp:2", "--x", "0.5", "--m-schedule", "geo:1000:2:4", "--csv", str(path)
    )
    assert code == 0
    rows = read_csv(path)
    assert rows[0] == ["m", "lhs", "target", "rel_error"]
    assert [int(r[0]) for r in rows[1:]] == [1000, 2000, 4000, 8000]
    for r in rows[1:]:
        lhs, target, err = map(float, r[1:])
        assert err == abs(lhs - target) / abs(target)
        assert all("," not in cell and " " not in cell for cell in r)


def test_cutlocus_csv_round_trip(tmp_path, capsys):
    from jacobicross.asymptotics import cutlocus_sum
    from jacobicross.geometry import quaternionic_projective

    path = tmp_path / "cl.csv"
    run_cli(capsys, "verify-cutlocus", "--space", "hp:2", "--m-schedule", "10,100,1000", "--csv", str(path))
    rows = read_csv(path)
    assert rows[0] == ["m", "lhs", "target", "rel_error"]
    for r in rows[1:]:
        assert float(r[1]) == cutlocus_sum(quaternionic_projective(2), int(r[0]))


def test_kuznecov_csv(tmp_path, capsys):
    path = tmp_path / "k.csv"
    code, out, _ = run_cli(
        capsys, "kuznecov", "--space", "sphere:1", "--target", "sphere:1", "--t-max", "1e4", "--steps", "4",
        "--csv", str(path),
    )
    rows = read_csv(path)
    assert rows[0] == ["T", "empirical", "predicted", "ratio"]
    assert [float(r[0]) for r in rows[1:]] == [2500.0, 5000.0, 7500.0, 10000.0]
    for r in rows[1:]:
        T, emp, pred, ratio = map(float, r)
        assert ratio == emp / pred
    assert code == (0 if abs(float(rows[-1][3]) - 1) <= 0.05 else 1)
    assert code == 0


def test_orthogonality_csv(tmp_path, capsys):
    path = tmp_path / "g.csv"
    code, out, _ = run_cli(
        capsys, "orthogonality", "--alpha", "3", "--beta", "1", "--max-degree", "6", "--csv", str(path)
    )
    assert code == 0
    rows = read_csv(path)
    assert rows[0] == ["i", "j", "gram_entry", "abs_error"]
    assert len(rows) - 1 == 7 * 8 // 2
    assert max(float(r[3]) for r in rows[1:]) <= 1e-10


def test_normalization(capsys):
    code, out, _ = run_cli(capsys, "normalization", "--space", "cap2", "--max-degree", "20")
    assert code == 0
    assert last_line(out) == "RESULT: PASS"


def test_csv_bit_identical_across_runs(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path, workers in ((a, "1"), (b, "4")):
        run_cli(capsys, "verify-cutlocus", "--space", "cap2", "--m-schedule", "20000", "--workers", workers, "--csv", str(path))
    assert a.read_bytes() == b.read_bytes()


# helpers

def test_parse_schedule():
    assert parse_schedule("1000") == [1000]
    assert parse_schedule("10,20,40") == [10, 20, 40]
    assert parse_schedule("geo:1000:2:6") == [1000, 2000, 4000, 8000, 16000, 32000]
    for bad in ("", "0", "5,5", "geo:1:1:3", "geo:10:2", "1.5", "geo:10:2:0"):
        with pytest.raises(UsageError):
            parse_schedule(bad)


def test_parse_target():
    assert parse_target("cutlocus") == CutLocus()
    assert parse_target("sphere:0.25") == DistanceSphere(0.25)
    for bad in ("sphere:", "sphere:x", "cut", "ball:1"):
        with pytest.raises(UsageError):
            parse_target(bad)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "jacobicross", "eval", "--alpha", "1", "--beta", "0", "--degree", "3", "--x", "-1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "RESULT: PASS"
    proc = subprocess.run(
        [sys.executable, "-m", "jacobicross", "verify-identity", "--alpha", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 2
    assert len(proc.stderr.strip().splitlines()) == 1
