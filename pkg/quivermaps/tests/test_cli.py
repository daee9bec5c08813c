"""Command-line surface: outputs and exit codes."""

import os
import sys

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))

from quivermaps import cli
from quivermaps.cli import (
    EXIT_FAILED,
    EXIT_NONPOSITIVE,
    EXIT_OK,
    EXIT_OUTPUT,
    EXIT_USAGE,
    main,
    parse_point,
)
from quivermaps.errors import ArityMismatch, NonPositiveCoordinate, ScalarParseError
from quivermaps.schema import CheckResult, SuiteResult, VerifyReport


def test_parse_point() -> None:
    assert str(parse_point("1,1/2", 2)) == "(1, 1/2)"
    with pytest.raises(ArityMismatch):
        parse_point("1,2,3", 2)
    with pytest.raises(NonPositiveCoordinate):
        parse_point("1,-2", 2)
    with pytest.raises(ScalarParseError):
        parse_point("1,two", 2)


def test_iterate_csv(capsys) -> None:
    code = main(["iterate", "--map", "f0", "--which", "phi", "--point", "1,1,1,2", "--steps", "2"])
    assert code == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,x1,x2,x3,x4,sheet,J1,J2"
    assert lines[-1] == "2,2,8,8,64,0,4,4"


def test_iterate_json(capsys) -> None:
    code = main(["iterate", "--map", "f0", "--which", "psi", "--point", "2,3", "--steps", "4", "--format", "json"])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert '"x1": "2"' in out
    assert out.count('"n"') == 5


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["iterate", "--map", "f0", "--point", "1,1,1", "--steps", "1"], EXIT_USAGE),
        (["iterate", "--map", "f0", "--point", "1,x,1,1", "--steps", "1"], EXIT_USAGE),
        (["iterate", "--map", "f0", "--point", "1,1,1,1", "--steps", "-1"], EXIT_USAGE),
        (["iterate", "--map", "f0", "--point", "1,0,1,1", "--steps", "1"], EXIT_NONPOSITIVE),
        (["iterate", "--map", "dp3", "--which", "psi", "--point", "1,-1/2"], EXIT_NONPOSITIVE),
        (["constants", "--map", "f0", "--ab", "0,1"], EXIT_NONPOSITIVE),
        (["iterate", "--map", "f0", "--point", "-1,1,1,1", "--steps", "1"], EXIT_NONPOSITIVE),
        (["levelset", "--map", "f0", "--P", "-2,3"], EXIT_NONPOSITIVE),
        (["constants", "--map", "dp3", "--ab", "-1,1"], EXIT_NONPOSITIVE),
    ],
)
def test_error_exit_codes(argv, expected, capsys) -> None:
    assert main(argv) == expected
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "error:" in captured.err


def test_levelset_generic(capsys) -> None:
    assert main(["levelset", "--P", "2,3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "points: 8" in out
    assert "case: ii" in out
    assert "jacobian: -5/9" in out
    assert "orbit P: (2,3) -> (3,1/2) -> (1/2,1/3) -> (1/3,2)" in out


def test_levelset_degenerate(capsys) -> None:
    assert main(["levelset", "--map", "f0", "--P", "2,1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "points: 4" in out
    assert "case: i" in out.splitlines()


def test_levelset_dp3(capsys) -> None:
    assert main(["levelset", "--map", "dp3", "--P", "2,3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "points: 12" in out
    assert "jacobian: 35/324" in out


def test_constants(capsys) -> None:
    assert main(["constants", "--map", "dp3", "--ab", "2,1"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["k1: 9", "k2: 81", "inequalities: hold"]


def test_classify(capsys) -> None:
    assert main(["classify", "--map", "f0", "--point", "1,1,2,5", "--P", "2,2"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "sheet: 1"
    assert main(["classify", "--map", "f0", "--point", "1,1,1,2", "--P", "2,3"]) == EXIT_FAILED
    assert capsys.readouterr().out.startswith("not in S:")


def test_export_plot(tmp_path, capsys) -> None:
    out = tmp_path / "plot.csv"
    code = main(["export-plot", "--map", "f0", "--point", "1,1,1,2", "--steps", "3", "--out", str(out)])
    assert code == EXIT_OK
    assert capsys.readouterr().out.strip() == f"wrote 4 rows to {out}"
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("n,log10_x1")
    assert len(lines) == 5


def test_export_plot_unwritable(tmp_path) -> None:
    target = tmp_path / "missing" / "plot.csv"
    code = main(["export-plot", "--map", "f0", "--point", "1,1,1,2", "--steps", "1", "--out", str(target)])
    assert code == EXIT_OUTPUT


def test_verify_is_deterministic(capsys) -> None:
    argv = ["verify", "--suite", "periodicity", "--seed", "3", "--samples", "5"]
    assert main(argv) == EXIT_OK
    first = capsys.readouterr().out
    assert main(argv) == EXIT_OK
    second = capsys.readouterr().out
    assert first == second
    assert "seed=3 samples=5 checks passed: 8/8" in first


def test_verify_rejects_zero_samples() -> None:
    assert main(["verify", "--suite", "periodicity", "--samples", "0"]) == EXIT_USAGE


def test_verify_failure_prints_first_counterexample(monkeypatch, capsys) -> None:
    failing = VerifyReport(
        seed=7,
        samples=3,
        suites=[
            SuiteResult(
                name="periodicity",
                checks=[
                    CheckResult(name="f0.period", total=3, failures=0),
                    CheckResult(name="dp3.period", total=3, failures=1, counterexample="x=(1,1,1,1,1,2) n=6"),
                ],
            )
        ],
    )
    monkeypatch.setattr(cli, "run_verification", lambda *args, **kwargs: failing)
    assert main(["verify", "--suite", "periodicity", "--samples", "3"]) == EXIT_FAILED
    out = capsys.readouterr().out
    assert "checks passed: 1/2" in out
    assert "first counterexample: periodicity/dp3.period: x=(1,1,1,1,1,2) n=6" in out
