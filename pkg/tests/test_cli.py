from __future__ import annotations

import csv
import json

import pytest

from conjgf.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def write_spec(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


@pytest.fixture()
def gamma3_spec(tmp_path):
    return write_spec(tmp_path, "gamma3.json", {"kind": "family", "name": "Gamma3", "p": 2})


def test_genfun_gamma3_partial_fractions(capsys, gamma3_spec):
    code, out = run_cli(capsys, "--json", "genfun", gamma3_spec, "--which", "A",
                        "--partial-fractions")
    assert code == 0
    payload = json.loads(out)
    # the three-term display of A for the dihedral group of order 16
    assert payload["results"]["A"]["partial_fractions"] == [
        [1, 2, 4, 1, 1],
        [3, 8, 8, 1, 1],
        [1, 8, 16, 1, 1],
    ]
    assert payload["results"]["A"]["denominator"] == [["4", 1], ["8", 1], ["16", 1]]
    assert payload["results"]["A"]["numerator"] == ["1", "-21", "92"]


def test_genfun_abelian_both(capsys, tmp_path):
    spec = write_spec(tmp_path, "c7.json", {"kind": "family", "name": "abelian", "p": 7})
    code, out = run_cli(capsys, "--json", "genfun", spec, "--which", "both")
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["A"] == payload["results"]["B"]
    assert payload["results"]["A"]["denominator"] == [["7", 1]]


def test_genfun_normalized_phi10(capsys, tmp_path):
    spec = write_spec(tmp_path, "phi10.json", {"kind": "family", "name": "Phi10", "p": 3})
    code, out = run_cli(capsys, "--json", "genfun", spec, "--which", "B", "--normalized",
                        "--partial-fractions")
    assert code == 0
    payload = json.loads(out)
    # Table row for Phi10 at p = 3: -1/3, 8/9, 4/9 over poles 1/81, 1/27, 1/9
    assert payload["results"]["B"]["partial_fractions"] == [
        [-1, 3, 1, 81, 1],
        [8, 9, 1, 27, 1],
        [4, 9, 1, 9, 1],
    ]


def test_genfun_deterministic_modulo_timing(capsys, gamma3_spec):
    _, out1 = run_cli(capsys, "--json", "genfun", gamma3_spec, "--coefficients", "4")
    _, out2 = run_cli(capsys, "--json", "genfun", gamma3_spec, "--coefficients", "4")
    p1, p2 = json.loads(out1), json.loads(out2)
    p1.pop("timing"), p2.pop("timing")
    assert p1 == p2
    # alpha_4 = (2*16^4 + 6*8^4 + 8*4^4)/16; beta_4 by convolving the display
    assert p1["results"]["alpha"] == [1, 7, 64, 736, 9856]
    assert p1["results"]["beta"] == [1, 7, 46, 316, 2296]


def test_certify_command(capsys, gamma3_spec):
    code, out = run_cli(capsys, "--json", "certify", gamma3_spec)
    assert code == 0
    payload = json.loads(out)
    assert payload["checks"][0]["passed"] is True


def test_verify_table_default(capsys):
    code, out = run_cli(capsys, "--json", "verify-table")
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["rows_failed"] == 0
    # abelian + 7 Gamma rows + abelian + 9 Phi rows, two checks (A and B) each
    assert payload["results"]["rows_checked"] == (8 + 10) * 2


def test_verify_table_rejects_large_prime(capsys):
    code, out = run_cli(capsys, "--json", "verify-table", "--p", "7")
    assert code == 1
    payload = json.loads(out)
    assert payload["checks"][0]["passed"] is False


def test_equiv_modes(capsys, tmp_path):
    d8 = write_spec(tmp_path, "d8.json", {"kind": "family", "name": "dihedral", "p": 8})
    q8 = write_spec(tmp_path, "q8.json", {"kind": "family", "name": "quaternion", "p": 8})
    c6 = write_spec(tmp_path, "c6.json", {"kind": "family", "name": "cyclic", "p": 6})
    s3 = write_spec(tmp_path, "s3.json", {"kind": "family", "name": "symmetric", "p": 3})

    code, out = run_cli(capsys, "--json", "equiv", d8, q8, "--mode", "A")
    assert code == 0 and json.loads(out)["results"]["a_equivalent"] is True

    code, out = run_cli(capsys, "--json", "equiv", d8, q8, "--mode", "isoclinic")
    payload = json.loads(out)
    assert code == 0 and payload["results"]["witness"]["verified"] is True

    code, out = run_cli(capsys, "--json", "equiv", c6, s3, "--mode", "B")
    assert code == 0 and json.loads(out)["results"]["b_equivalent"] is False


def test_oracle_command(capsys, tmp_path):
    s3 = write_spec(tmp_path, "s3.json", {"kind": "family", "name": "symmetric", "p": 3})
    code, out = run_cli(capsys, "--json", "oracle", s3, "--n-max", "3")
    assert code == 0
    payload = json.loads(out)
    rows = payload["results"]["table"]
    assert [r["alpha_brute"] for r in rows] == [1, 3, 11, 49]
    assert [r["beta_brute"] for r in rows] == [1, 3, 8, 21]
    assert all(c["passed"] for c in payload["checks"])


def test_bench_csv(capsys, tmp_path):
    out_csv = tmp_path / "bench.csv"
    code, out = run_cli(capsys, "--json", "bench", "--groups", "D32", "--n-max", "2",
                        "--out", str(out_csv))
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["d32_n2_work_ratio"] >= 100
    with open(out_csv, newline="", encoding="utf-8") as fh:
        rows = list(csv.DictReader(fh))
    assert {r["strategy"] for r in rows} == {"eq1_histogram", "brute_alpha",
                                             "eq4_recursion", "brute_beta"}
    d32_brute = next(r for r in rows if r["strategy"] == "brute_alpha" and r["n"] == "2")
    assert int(d32_brute["work"]) == 1024


def test_error_exit_code(capsys, tmp_path):
    missing = str(tmp_path / "nope.json")
    with pytest.raises(SystemExit):
        main(["genfun"])  # missing positional
    bad = write_spec(tmp_path, "bad.json", {"kind": "family", "name": "Phi5", "p": 2})
    code = main(["genfun", bad])
    assert code == 2
