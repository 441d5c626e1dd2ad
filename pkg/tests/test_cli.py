import csv
import io
import json
import subprocess
import sys

import pytest

from geoseq.cli import main
from geoseq.reports import pack_hex, unpack_hex

EX1 = ["--p", "5", "--m", "2", "--irreducible", "3,2,1", "--omega", "0,4"]
REF_11_2 = ["--p", "11", "--m", "2", "--irreducible", "2,7,1", "--omega", "9,2"]


def run(capsys, *argv):
    # argparse-level errors exit through SystemExit; the rest return a code
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_t1_bits(capsys):
    code, out, _ = run(capsys, "gen", *EX1, "--kind", "t1", "--format", "bits")
    assert code == 0
    assert out == "111001000010\n"


def test_gen_se_bits(capsys):
    code, out, _ = run(capsys, "gen", *EX1, "--kind", "se", "--e", "4", "--format", "bits")
    assert code == 0
    assert out == "101110000011010001011101\n"


def test_gen_hex_packing(capsys):
    code, out, _ = run(capsys, "gen", *EX1, "--kind", "t1", "--format", "hex")
    assert code == 0
    # bits 1,1,1,0,0,1,0,0 | 0,0,1,0 -> 0x27, 0x04
    assert out == "2704\n"
    assert unpack_hex(out, 12) == [1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0]


def test_pack_hex_round_trip():
    bits = [1, 0, 0, 0, 0, 0, 0, 0, 1]
    assert pack_hex(bits) == "0101"
    assert unpack_hex(pack_hex(bits), 9) == bits


def test_bad_prime(capsys):
    code, out, err = run(capsys, "gen", "--p", "4", "--m", "2", "--kind", "t1")
    assert code == 2
    assert out == ""
    assert "p must be an odd prime" in err
    assert len(err.strip().splitlines()) == 1


def test_field_construction_failures(capsys):
    code, out, err = run(capsys, "gen", "--p", "5", "--m", "2", "--irreducible", "1,0,1",
                         "--kind", "t1")
    assert (code, out) == (3, "")
    assert "reducible" in err
    code, out, _ = run(capsys, "gen", "--p", "5", "--m", "2", "--irreducible", "3,2,1",
                       "--omega", "1", "--kind", "t1")
    assert (code, out) == (3, "")


@pytest.mark.parametrize("argv", [
    ["gen", "--p", "5", "--m", "2", "--kind", "se"],
    ["gen", "--p", "5", "--m", "2", "--kind", "se", "--e", "12"],
    ["gen", "--p", "5", "--m", "2", "--kind", "t1", "--format", "csv"],
    ["gen", "--p", "5", "--m", "1", "--kind", "t1"],
    ["crosscorr", "--p", "5", "--m", "2", "--e1", "3", "--e2", "3"],
    ["verify", "--p", "5", "--m", "2", "--e-list", "1,x"],
    ["lincomp", "--p", "5", "--m", "2", "--irreducible", "3,y,1", "--e", "1"],
])
def test_parameter_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert len(err.strip().splitlines()) >= 1
    assert err.strip().splitlines()[-1].startswith("geoseq")


def test_missing_required_flag_is_one_line(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--p", "5"])
    assert exc.value.code == 2
    out, err = capsys.readouterr()
    assert out == "" and len(err.strip().splitlines()) == 1


def test_autocorr_csv_rows(capsys):
    code, out, _ = run(capsys, "autocorr", "--p", "5", "--m", "3", "--e", "25", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["tau", "value", "predicted", "branch"]
    assert len(rows) == 1 + 124
    assert all(r[1] == r[2] for r in rows[1:])
    assert rows[1] == ["0", "124", "124", "thm1:even:2N"]


def test_autocorr_json(capsys):
    code, out, _ = run(capsys, "autocorr", *EX1, "--e", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["params"] == {"p": 5, "m": 2, "f": "3,2,1", "omega": "0,4", "kind": "se", "e": 4}
    assert doc["match"] is True
    assert doc["observed"] == doc["predicted"]
    assert len(doc["branches"]) == 24


def test_autocorr_t1(capsys):
    code, out, _ = run(capsys, "autocorr", *EX1, "--kind", "t1")
    rows = list(csv.reader(io.StringIO(out)))[1:]
    assert code == 0
    assert [int(r[1]) for r in rows] == [12, 0, 0, 0, 0, 0, -8, 0, 0, 0, 0, 0]


def test_crosscorr_sum1_branch(capsys):
    code, out, _ = run(capsys, "crosscorr", *REF_11_2, "--e1", "11", "--e2", "14")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))[1:]
    assert len(rows) == 48
    assert any(r[3].startswith("thm2:odd-sum1:") for r in rows)
    assert all(r[1] == r[2] for r in rows)


def test_crosscorr_swap(capsys):
    code, out, err = run(capsys, "crosscorr", *REF_11_2, "--e1", "18", "--e2", "6",
                         "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert (doc["params"]["e1"], doc["params"]["e2"], doc["params"]["swapped"]) == (6, 18, True)
    assert "swapped" in err
    assert doc["match"]


def test_lincomp_json(capsys):
    code, out, _ = run(capsys, "lincomp", "--p", "5", "--m", "3", "--e", "16", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["L_closed"] == 93 and doc["agreement"] is True
    assert doc["G"] == 31 and doc["nu2"] == 1


def test_lincomp_sweep_csv(capsys):
    code, out, _ = run(capsys, "lincomp", *REF_11_2, "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert [int(r["L_closed"]) for r in rows] == [45 if e % 3 == 2 else 47 for e in range(24)]


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--p", "5", "--m", "2")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]


def test_verify_reports_even_half_branch(capsys):
    code, out, _ = run(capsys, "verify", "--p", "11", "--m", "2")
    doc = json.loads(out)
    assert code == 0
    assert doc["branch_coverage"]["thm2:even-half:N+N1"] > 0


def test_verify_fault_hook(capsys):
    code, out, err = run(capsys, "verify", *EX1, "--inject-fault", "3")
    doc = json.loads(out)
    assert code == 1
    assert doc["first_failure"]["theorem"] == "thm1"
    assert "thm1 mismatch" in err


def test_field_info(capsys):
    code, out, _ = run(capsys, "field-info", "--p", "3", "--m", "3")
    doc = json.loads(out)
    assert code == 0
    assert (doc["N"], doc["N1"], doc["N2"]) == (26, -10, 2)


def test_out_file_and_env_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("GEOSEQ_OUTPUT_DIR", str(tmp_path))
    code, out, _ = run(capsys, "gen", *EX1, "--kind", "t2", "--out", "sub/t2.txt")
    assert code == 0 and out == ""
    assert (tmp_path / "sub" / "t2.txt").read_text() == "111101000110\n"


def test_runs_are_byte_identical():
    argv = [sys.executable, "-m", "geoseq", "crosscorr", "--p", "5", "--m", "3",
            "--e1", "4", "--e2", "35", "--format", "json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["match"]
