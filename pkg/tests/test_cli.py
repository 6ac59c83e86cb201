import json

import pytest

from opnkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- bounds ---------------------------------------------------------------------


def test_bounds_r1(capsys):
    code, out, _ = run(capsys, "bounds", "-r", "1", "--digits", "10")
    assert code == 0
    assert "[1.000000000e0, 1.000000000e0]" in out
    assert "2^(4^1) = 2^4" in out


def test_bounds_r2_brackets_algebraic(capsys):
    code, out, _ = run(capsys, "bounds", "-r", "2", "--digits", "20")
    assert code == 0
    assert "5.8284271247461900976" in out


def test_bounds_r9_json(capsys):
    code, out, _ = run(capsys, "bounds", "-r", "9", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["n_upper_bound"]["log2"] == 262144
    assert doc["radical_lower_bound"]["lo"].startswith("7.400694480049443621632485203800044")


def test_bounds_invalid(capsys):
    code, _, err = run(capsys, "bounds", "-r", "0")
    assert code == 2
    assert "error" in err


# --- check ----------------------------------------------------------------------


def test_check_refuted(capsys):
    code, out, _ = run(capsys, "check", "3^2*5*7^2")
    assert code == 1
    assert "FAIL min_distinct: r = 3 < 9" in out
    assert out.rstrip().endswith("overall: Refuted")


def test_check_composite(capsys):
    code, _, err = run(capsys, "check", "4*7")
    assert code == 2
    assert "composite factor 4" in err


def test_check_even(capsys):
    code, out, _ = run(capsys, "check", "2^2*7")
    assert code == 1
    assert "FAIL parity" in out


def test_check_undecided_exit_code(capsys):
    huge = "3^44000*5^2*7^2*11^2*13^2*101^2*10007^2*100000007^2*100000037"
    code, out, _ = run(capsys, "check", huge)
    assert code == 3
    assert "overall: Undecided" in out


def test_check_json_roundtrip(capsys):
    code, out, _ = run(capsys, "check", "3^2*5*7^2", "--format", "json")
    assert code == 1
    rendered = out.strip()
    doc = json.loads(rendered)
    again = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    assert again == rendered


# --- verify ---------------------------------------------------------------------


def test_verify_chain(capsys):
    code, out, _ = run(capsys, "verify", "chain", "--limit", "20000")
    assert code == 0
    assert "violations: 0" in out


def test_verify_lift_seeded(capsys):
    code, out, _ = run(capsys, "verify", "lift", "--trials", "300", "--seed", "42")
    assert code == 0


def test_verify_deterministic(capsys):
    _, out1, _ = run(capsys, "verify", "bounds", "--trials", "50", "--seed", "9", "--format", "json")
    _, out2, _ = run(capsys, "verify", "bounds", "--trials", "50", "--seed", "9", "--format", "json")
    assert out1 == out2


def test_verify_bad_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_verify_bad_trials(capsys):
    code, _, err = run(capsys, "verify", "lift", "--trials", "0")
    assert code == 2


def test_precision_cap_env(monkeypatch, capsys):
    from opnkit.cli import _build_parser

    monkeypatch.setenv("OPNKIT_PRECISION_CAP", "4096")
    args = _build_parser().parse_args(["check", "3"])
    assert args.precision_cap == 4096
    monkeypatch.delenv("OPNKIT_PRECISION_CAP")
    args = _build_parser().parse_args(["check", "3"])
    assert args.precision_cap == 1 << 20


# --- scan -----------------------------------------------------------------------


def test_scan_classical(capsys):
    code, out, _ = run(capsys, "scan", "--lo", "2", "--hi", "10000", "--jobs", "1")
    assert code == 0
    for n in (6, 28, 496, 8128):
        assert str(n) in out


def test_scan_odd_empty(capsys):
    code, out, _ = run(capsys, "scan", "--lo", "3", "--hi", "100000", "--parity", "odd", "--jobs", "1")
    assert code == 0
    assert "found: 0" in out


def test_scan_json_roundtrip(capsys):
    code, out, _ = run(capsys, "scan", "--lo", "2", "--hi", "10000", "--jobs", "1", "--format", "json")
    assert code == 0
    rendered = out.strip()
    doc = json.loads(rendered)
    assert [v["n"] for v in doc["violations"]] == [6, 28, 496, 8128]
    assert json.dumps(doc, sort_keys=True, separators=(",", ":")) == rendered


def test_scan_invalid_range(capsys):
    code, _, err = run(capsys, "scan", "--lo", "10", "--hi", "2", "--jobs", "1")
    assert code == 2
    assert "error" in err


def test_scan_bad_checkpoint(tmp_path, capsys):
    ck = tmp_path / "ck.jsonl"
    ck.write_text("garbage\n{}\n")
    code, _, err = run(
        capsys, "scan", "--lo", "2", "--hi", "10000", "--jobs", "1", "--checkpoint", str(ck)
    )
    assert code == 4
    assert "checkpoint" in err


def test_scan_resume_matches(tmp_path, capsys):
    ck = tmp_path / "ck.jsonl"
    code, full, _ = run(capsys, "scan", "--lo", "2", "--hi", "50000", "--jobs", "1", "--format", "json")
    run(capsys, "scan", "--lo", "2", "--hi", "50000", "--jobs", "1",
        "--checkpoint", str(ck), "--block-size", "4096")
    lines = ck.read_text().splitlines()
    ck.write_text("\n".join(lines[:3]) + "\n")
    code, resumed, _ = run(
        capsys, "scan", "--lo", "2", "--hi", "50000", "--jobs", "1",
        "--checkpoint", str(ck), "--block-size", "4096", "--format", "json",
    )
    assert code == 0
    assert resumed == full


# --- sk -------------------------------------------------------------------------


def test_sk_text(capsys):
    code, out, _ = run(capsys, "sk", "3*5*7")
    assert code == 0
    assert "S_1 = 71/105" in out
    assert "S_2 = 1/7" in out
    assert "S_3 = 1/105" in out
    assert "ok" in out


def test_sk_single(capsys):
    code, out, _ = run(capsys, "sk", "3")
    assert code == 0
    assert "S_1 = 1/3" in out


def test_sk_json(capsys):
    code, out, _ = run(capsys, "sk", "3*5*7", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["sums"] == [
        {"k": 1, "numerator": 71, "denominator": 105},
        {"k": 2, "numerator": 1, "denominator": 7},
        {"k": 3, "numerator": 1, "denominator": 105},
    ]
    assert doc["identity"]["holds"] is True
    rendered = out.strip()
    assert json.dumps(doc, sort_keys=True, separators=(",", ":")) == rendered


def test_sk_parse_error(capsys):
    code, _, err = run(capsys, "sk", "3**5")
    assert code == 2
