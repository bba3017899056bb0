"""Command-line harness: records, exit codes, determinism."""

import json

import pytest

from tiedbox.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    records = [json.loads(line) for line in out.splitlines() if line.strip()]
    return code, records


def test_enumerate(capsys):
    code, records = run(capsys, "enumerate", "--monoid", "br-jones", "--n", "4")
    assert code == 0
    assert records[0]["count"] == 35


def test_enumerate_with_elements(capsys):
    code, records = run(capsys, "enumerate", "--monoid", "br-symmetric",
                        "--n", "2", "--ramified")
    assert code == 0
    assert records[0]["count"] == 3
    assert len(records) == 4
    assert all("element" in r for r in records[1:])


def test_present_check(capsys):
    code, records = run(capsys, "present-check", "--preset", "brjn", "--n", "3")
    assert code == 0
    assert records[0]["status"] == "pass"
    assert records[0]["normal_forms"] == 10


def test_dim_table(capsys):
    code, records = run(capsys, "dim", "--family", "bh", "--max-n", "5")
    assert code == 0
    assert [r["dim"] for r in records] == [1, 3, 11, 47, 231]


def test_multiply_roundtrip(capsys):
    # z_1 * z_1 = e_1 + (q - q^-1) z_1 in basis coordinates
    code, records = run(capsys, "multiply", "--algebra", "bh", "--n", "2",
                        "--lhs", "(1*q^0) * 1", "--rhs", "(1*q^0) * 1")
    assert code == 0
    assert records[0]["status"] == "pass"


def test_cellular(capsys):
    code, records = run(capsys, "cellular", "--family", "btl", "--n", "3")
    assert code == 0
    assert all(r["status"] == "pass" for r in records)


def test_center(capsys):
    code, records = run(capsys, "center", "--monoid", "r-symmetric", "--n", "3")
    assert code == 0
    assert records[0]["count"] == 2


def test_normal_form_command(capsys):
    from tiedbox import ramified

    element = str(ramified.gen_z(3, 1) * ramified.gen_z(3, 2))
    code, records = run(capsys, "normal-form", "--monoid", "br-symmetric",
                        "--element", element)
    assert code == 0
    assert records[0]["status"] == "pass"


def test_table_format(capsys):
    code = main(["dim", "--family", "tl", "--max-n", "3", "--format", "table"])
    out = capsys.readouterr().out
    assert code == 0
    assert "dim=5" in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.jsonl"
    code = main(["enumerate", "--monoid", "jones", "--n", "4",
                 "--out", str(target)])
    capsys.readouterr()
    assert code == 0
    rec = json.loads(target.read_text().splitlines()[0])
    assert rec["count"] == 14


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--monoid", "not-a-monoid", "--n", "3"])
    assert exc.value.code == 64


def test_bad_element_exit_code(capsys):
    code = main(["multiply", "--algebra", "bh", "--n", "2",
                 "--lhs", "garbage", "--rhs", "(1*q^0) * 0"])
    capsys.readouterr()
    assert code == 64


def test_verify_all_quick_deterministic(capsys):
    code1, records1 = run(capsys, "verify-all", "--profile", "quick",
                          "--seed", "5")
    code2, records2 = run(capsys, "verify-all", "--profile", "quick",
                          "--seed", "5")
    assert code1 == code2 == 0
    assert records1 == records2
    assert all(r["status"] == "pass" for r in records1)
