import io
import json

import pytest

from quasiring.cli import main

SPEC = "space Z discrete 2\nalgebra Y zmod 3\nring R = C(Z, Y)\n"


@pytest.fixture
def spec_file(tmp_path):
    p = tmp_path / "spec.qr"
    p.write_text(SPEC)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_text(capsys, spec_file):
    code, out, _ = run(capsys, "analyze", spec_file)
    assert code == 0
    assert "quasi_components" in out


def test_analyze_json_schema(capsys, spec_file):
    code, out, _ = run(capsys, "analyze", spec_file, "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["schema"] == 1
    assert payload["rings"][0]["elements"] == 9
    # round trip: serialized output parses back to the same structure
    assert json.loads(json.dumps(payload)) == payload


def test_ideals_lists_primes(capsys, spec_file):
    code, out, _ = run(capsys, "ideals", spec_file, "--json")
    payload = json.loads(out)
    assert code == 0
    entry = payload["rings"][0]
    assert entry["complete"]
    assert len(entry["primes"]) == 2
    assert entry["prime_radical"] == [[0, 0]]


def test_check_pass_exit_zero(capsys, spec_file):
    code, out, _ = run(capsys, "check", "T34", spec_file)
    assert code == 0
    assert "PASS" in out


def test_check_fail_exit_one(capsys, tmp_path):
    p = tmp_path / "s.qr"
    p.write_text("space Z discrete 3\nalgebra Y zmod 2\nring R = C(Z, Y)\n")
    code, out, _ = run(capsys, "check", "T26", str(p))
    assert code == 1
    assert "FAIL" in out and "witness=" in out


def test_check_ids_from_spec_directive(capsys, tmp_path):
    p = tmp_path / "s.qr"
    p.write_text(SPEC + "check T34 T5\n")
    code, out, _ = run(capsys, "check", str(p), "--json")
    payload = json.loads(out)
    assert code == 0
    assert {r["checker"] for r in payload["reports"]} == {"T34", "T5"}


def test_check_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(SPEC))
    code, out, _ = run(capsys, "check", "T34", "-")
    assert code == 0


def test_parse_error_exit_two(capsys, tmp_path):
    p = tmp_path / "bad.qr"
    p.write_text("space Z discrete\n")
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 2
    assert "expected" in err


def test_missing_file_exit_two(capsys):
    code, _, _ = run(capsys, "analyze", "/does/not/exist.qr")
    assert code == 2


def test_unknown_checker_exit_two(capsys, spec_file):
    code, _, err = run(capsys, "check", "T5.9", spec_file)
    assert code == 2
    assert "unknown checker" in err


def test_budget_env_override(capsys, spec_file, monkeypatch):
    monkeypatch.setenv("QUASIRING_BUDGET", "2")
    code, _, err = run(capsys, "analyze", spec_file)
    assert code == 3
    assert "budget" in err


def test_budget_flag_beats_env(capsys, spec_file, monkeypatch):
    monkeypatch.setenv("QUASIRING_BUDGET", "2")
    code, _, _ = run(capsys, "analyze", spec_file, "--budget", "100000")
    assert code == 0


def test_generate_success(capsys):
    code, out, _ = run(capsys, "generate", "--primes", "3",
                       "--algebra", "zmod:2", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["proper_primes"] == 3
    assert payload["verified"]


def test_generate_refused_zero_divisors(capsys):
    code, out, _ = run(capsys, "generate", "--primes", "2",
                       "--algebra", "zmod:4", "--json")
    payload = json.loads(out)
    assert code == 1
    assert payload["witness"] == [2, 2]


def test_fuzz_small(capsys):
    code, out, _ = run(capsys, "fuzz", "--instances", "2", "--seed", "5",
                       "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["failures"] == []


def test_usage_error(capsys):
    assert main(["frobnicate"]) == 2
