"""Command-line interface: formats, determinism, exit codes."""

import csv
import io
import json
from fractions import Fraction

import pytest

from newform_weyl.cli import main
from newform_weyl.exactnum import SymbolicCoefficient
from newform_weyl.spectral import newform_coeffs


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_coeffs_text_level_12(capsys):
    code, out, err = run_cli(capsys, "coeffs", "12", "--kind", "newform")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines[0] == "level 12 (newform)"
    assert "  c1 = 1/6" in lines
    assert "  c2 = 0" in lines
    assert "  c3 = 0" in lines
    assert any("cocompact type" in ln and "n>1-and-4||M-rule" in ln for ln in lines)


def test_coeffs_json_level_9_round_trips(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "9", "--kind", "newform", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["level"] == 9
    assert record["kind"] == "newform"
    assert Fraction(record["c1"]) == Fraction(5, 12)
    assert record["cocompact"] is False
    expected = newform_coeffs(9)
    assert SymbolicCoefficient.from_json_dict(record["c2"]) == expected.c2
    assert SymbolicCoefficient.from_json_dict(record["c3"]) == expected.c3
    assert record["c3"]["logs"] == {"2": "-1", "3": "-3"}


def test_coeffs_json_both_returns_list(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "12", "--kind", "both", "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert [r["kind"] for r in records] == ["full", "newform"]
    assert all(r["level"] == 12 for r in records)


def test_coeffs_csv_exact_fields(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "12", "--kind", "both", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 2
    full, new = rows
    assert full["c1"] == "2" and new["c1"] == "1/6"
    assert full["c2_const"] == "-12" and new["c2_const"] == "0"
    assert full["c3_logs"] == "2:-16;3:-6" and new["c3_logs"] == ""
    assert full["cocompact"] == "true" and new["cocompact"] == "true"
    assert full["reason"] == "n>1-and-4||M-rule"


def test_cli_output_is_deterministic(capsys):
    argv = ("coeffs", "360", "--kind", "both", "--format", "json")
    _, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert first == second


def test_scan_only_cocompact(capsys):
    code, out, _ = run_cli(capsys, "scan", "--max", "16", "--only-cocompact")
    assert code == 0
    levels = [int(ln.split()[0]) for ln in out.splitlines()[1:]]
    assert levels == [6, 10, 12, 14, 15]


def test_scan_csv(capsys):
    code, out, _ = run_cli(capsys, "scan", "--max", "12", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 12
    by_level = {int(r["level"]): r for r in rows}
    assert by_level[12]["cocompact"] == "true"
    assert by_level[12]["reason"] == "n>1-and-4||M-rule"
    assert by_level[1]["cocompact"] == "false"
    assert by_level[6]["square_part"] == "1" and by_level[6]["squarefree_part"] == "6"


def test_weyl_breakdown(capsys):
    code, out, _ = run_cli(capsys, "weyl", "1", "--lambda", "10000")
    assert code == 0
    assert "level 1 (newform), lambda = 10000" in out
    assert "833.333333333" in out
    assert "-293.174239552" in out
    assert "78.0363011891" in out


def test_verify_suite_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "group", "--max", "200")
    assert code == 0
    lines = out.splitlines()
    assert all(ln.startswith(("PASS", "FAIL", "  note:", "suite")) for ln in lines)
    assert lines[-1].startswith("suite group: ")
    assert lines[-1].endswith("3/3 checks passed")
    assert not any(ln.startswith("FAIL") for ln in lines)


def test_invalid_arguments_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["weyl", "1", "--lambda", "0.5"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["scan", "--max", "2000000"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["coeffs", "0"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_large_level_within_bounds(capsys):
    code = main(["coeffs", "99999999", "--precision", "50"])
    out, err = capsys.readouterr()
    assert code == 0 and err == ""
    assert out.startswith("level 99999999 (newform)")


def test_library_value_error_becomes_exit_2(monkeypatch, capsys):
    from newform_weyl import cli

    def boom(args):
        raise ValueError("boom")

    monkeypatch.setattr(cli, "cmd_weyl", boom)
    code = cli.main(["weyl", "1", "--lambda", "2"])
    captured = capsys.readouterr()
    assert code == 2
    assert "error: boom" in captured.err
