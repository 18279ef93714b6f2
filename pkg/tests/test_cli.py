import json
import subprocess
import sys

import pytest

from capfield.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def run_json(capsys, *argv):
    status, out, _ = run(capsys, *argv, "--format", "json")
    return status, json.loads(out)


def test_verify_f81(capsys):
    status, out = run_json(capsys, "verify", "--p", "3", "--n", "4", "--d", "20")
    assert status == 0
    assert out["cap"]["verdict"] and out["strong"] and out["pass"]
    assert out["field"]["modulus"] == "x^4+2x+2"


def test_verify_f243_complete(capsys):
    status, out = run_json(capsys, "verify", "--p", "3", "--n", "5", "--d", "22", "--complete")
    assert status == 0
    c = out["complete"]
    assert c["naive"]["complete"] and c["reduced"]["complete"] and c["agree"]
    assert c["reduced"]["targets_checked"] == 11


def test_verify_full_group_fails_with_witness(capsys):
    status, out = run_json(capsys, "verify", "--p", "3", "--n", "4", "--d", "80")
    assert status == 1
    w = out["cap"]["witness"]
    assert len(w) == 3 and len({x["encoding"] for x in w}) == 3
    status, text, _ = run(capsys, "verify", "--p", "3", "--n", "4", "--d", "80")
    assert "witness:" in text and text.rstrip().endswith("FAIL")


def test_verify_bad_divisor(capsys):
    status, _, err = run(capsys, "verify", "--p", "3", "--n", "4", "--d", "7")
    assert status == 2 and "does not divide" in err


def test_verify_bad_modulus(capsys):
    status, _, err = run(capsys, "verify", "--p", "2", "--n", "2", "--modulus", "x^2+1", "--d", "3")
    assert status == 2 and "irreducible" in err


def test_missing_field_flags(capsys):
    status, _, err = run(capsys, "verify", "--d", "3")
    assert status == 2 and "--p" in err


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["scan", "--p", "3", "--n", "2", "--bogus"])
    assert exc.value.code == 2


def test_scan_f64(capsys):
    status, out = run_json(capsys, "scan", "--p", "2", "--n", "6")
    rows = {r["d"]: r for r in out["rows"]}
    assert status == 0 and rows[9]["is_cap"] and not rows[63]["is_cap"]
    assert [r["d"] for r in out["rows"]] == sorted(rows)


def test_scan_f3(capsys):
    status, out = run_json(capsys, "scan", "--p", "3", "--n", "1")
    assert [r["d"] for r in out["rows"]] == [1, 2]


def test_scan_f729(capsys):
    status, out = run_json(capsys, "scan", "--p", "3", "--n", "6", "--no-complete")
    rows = {r["d"]: r for r in out["rows"]}
    assert rows[28]["is_cap"] and rows[28]["strong"]


def test_scan_guard(capsys):
    status, _, err = run(capsys, "scan", "--p", "2", "--n", "24")
    assert status == 2 and "bound" in err


def test_tables_text(capsys):
    status, text, _ = run(capsys, "tables", "set")
    lines = text.splitlines()
    assert status == 0
    assert lines[1] == "0001 0011 0121 1001 1022 || 0010 0110 1210 0021 0201"
    assert sum(len(line.split("||")[0].split()) for line in lines if line[:1].isdigit()) == 40
    status, text, _ = run(capsys, "tables", "quads")
    assert text.splitlines()[1] == "0 | 001 012 110 323 130 023 322 122 133"


def test_tables_json(capsys):
    status, out = run_json(capsys, "tables", "set")
    assert out["leftover"] == "0000" and len(out["cosets"]) == 4


def test_tables_unknown_deck():
    with pytest.raises(SystemExit) as exc:
        main(["tables", "uno"])
    assert exc.value.code == 2


def test_cosets_f81(capsys):
    status, out = run_json(capsys, "cosets", "--p", "3", "--n", "4", "--d", "20")
    assert status == 0 and out["partition"]
    assert len(out["cosets"]) == 4 and all(c["cap"] for c in out["cosets"])


def test_cosets_f243_complete(capsys):
    status, out = run_json(capsys, "cosets", "--p", "3", "--n", "5", "--d", "22", "--complete")
    assert status == 0 and all(c["complete"] for c in out["cosets"])


def test_pairs_f729(capsys):
    status, text, _ = run(capsys, "pairs", "--p", "3", "--n", "6", "--d", "28", "--r", "4")
    assert status == 0
    assert "no 4-coset union cap" in text
    assert "pair partition into 13 caps of size 56" in text


def test_pairs_requires_cap(capsys):
    status, _, err = run(capsys, "pairs", "--p", "3", "--n", "4", "--d", "80")
    assert status == 2


def test_family(capsys):
    status, out = run_json(capsys, "family", "--n-max", "6")
    assert status == 0 and out["pass"]
    by_n = {r["n"]: r for r in out["rows"]}
    assert sorted(by_n) == [2, 3, 4, 5, 6]
    for n, r in by_n.items():
        assert r["zero_augmented_is_cap"] == (n % 2 == 0)
        if n % 2:
            assert r["zero_witness"]


def test_family_bound(capsys):
    status, _, err = run(capsys, "family", "--n-max", "9")
    assert status == 2


def test_modulus_override(capsys):
    _, a = run_json(capsys, "verify", "--p", "3", "--n", "6", "--d", "28")
    _, b = run_json(capsys, "verify", "--p", "3", "--n", "6", "--d", "28", "--modulus", "x^6+2x^4+x^2+2x+2")
    assert a["field"]["modulus"] != b["field"]["modulus"]
    assert a["pass"] == b["pass"] is True


def test_deterministic_output(capsys):
    argv = ["verify", "--p", "2", "--n", "8", "--d", "17", "--seed", "3", "--format", "json"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "capfield", "verify", "--p", "2", "--n", "6", "--d", "9"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and "PASS" in proc.stdout
