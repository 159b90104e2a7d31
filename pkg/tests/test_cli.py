import io
import json
import subprocess
import sys

import pytest

from schubert_smooth import __version__
from schubert_smooth.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, run
from schubert_smooth.triality import LaurentMatrix, u_power_diag


def call(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, _ = call(*argv, "--format", "json")
    return code, json.loads(out)


def test_exit_code_values():
    assert (EXIT_OK, EXIT_MISMATCH, EXIT_USAGE) == (0, 2, 1)


def test_wmf():
    code, rec = call_json("wmf", "--type", "G", "--rank", "2", "--weight", "1,0")
    assert code == 0
    assert rec["schema"] == "schubert-smooth/1"
    assert rec["wmf"] and rec["quasi_minuscule"] and not rec["minuscule"]
    code, rec = call_json("wmf", "--type", "D", "--rank", "4", "--weight", "0,1,0,0")
    assert code == 0 and rec["wmf"] is False


def test_mult_with_check():
    code, rec = call_json("mult", "--type", "B", "--rank", "2", "--weight", "1,0", "--check")
    assert code == 0
    assert rec["dimension"] == rec["weyl_dimension"] == 5
    assert all(r["kostant"] == r["multiplicity"] for r in rec["rows"])


def test_fold_all_cases_match():
    code, rec = call_json("fold", "--max-rank", "8")
    assert code == 0
    assert all(r["match"] for r in rec["rows"])


def test_fold_single_case_and_automorphism():
    code, rec = call_json("fold", "--case", "PU_3")
    assert code == 0 and rec["rows"][0]["isogeny"] == "adjoint"
    code, rec = call_json("fold", "--type", "D", "--rank", "4", "--automorphism", "triality")
    assert code == 0 and rec["rows"][0]["fixed"] == "G2"


def test_kumar():
    code, rec = call_json("kumar", "--case", "A", "--l", "2")
    assert code == 0 and rec["ratio"] == 8 and rec["smooth"] is False
    code, rec = call_json("kumar", "--case", "B", "--l", "1")
    assert code == 0 and rec["smooth"] is True


def test_kumar_mismatch_exit_code(monkeypatch):
    import schubert_smooth.kumar as kumar

    monkeypatch.setattr(kumar, "smoothness_ratio", lambda w, v: 7)
    code, _, err = call("kumar", "--case", "A", "--l", "1")
    assert code == EXIT_MISMATCH
    assert "mismatch" in err


def test_triality_checks():
    code, rec = call_json("triality", "--samples", "10")
    assert code == 0
    assert all(r["pass"] for r in rec["rows"])
    code, rec = call_json("triality", "--check", "smith")
    assert [r["value"] for r in rec["rows"]] == [[-2, -1, -1, 0, 0, 1, 1, 2]]


def test_smith_from_file(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(u_power_diag((3, 1, 0, 0)).dumps())
    code, rec = call_json("smith", "--input", str(path))
    assert code == 0 and rec["valuations"] == [-3, -1, 0, 0, 0, 0, 1, 3]
    code, rec = call_json("smith")
    assert rec["valuations"] == [-2, -1, -1, 0, 0, 1, 1, 2]


def test_smith_singular_is_usage_error(tmp_path):
    path = tmp_path / "z.json"
    path.write_text(LaurentMatrix.zero(8).dumps())
    assert call("smith", "--input", str(path))[0] == EXIT_USAGE
    assert call("smith", "--input", str(tmp_path / "missing.json"))[0] == EXIT_USAGE


def test_classify_small():
    code, rec = call_json("classify", "--max-rank", "2", "--coord-bound", "2", "--a-family-bound", "2")
    assert code == 0 and rec["mismatches"] == []
    assert all(r["rationally_smooth"] for r in rec["rationally_smooth"])
    exotic = [r for r in rec["smooth"] if r["exotic"]]
    assert {r["case"] for r in exotic} == {"C-BC_1", "C-BC_2"}


def test_classify_all_rows_includes_negatives():
    code, rec = call_json("classify", "--max-rank", "2", "--coord-bound", "2", "--all-rows")
    assert code == 0
    assert any(not r["rationally_smooth"] for r in rec["rationally_smooth"])
    assert any(not r["smooth"] for r in rec["smooth"])


@pytest.mark.parametrize("argv", [
    ["wmf", "--type", "Q", "--rank", "2", "--weight", "1,0"],
    ["wmf", "--type", "A", "--rank", "2", "--weight", "1"],
    ["wmf", "--type", "A", "--rank", "2", "--weight", "-1,0"],
    ["kumar", "--case", "C", "--l", "1"],
    ["kumar", "--case", "A", "--l", "0"],
    ["fold", "--case", "nonsense"],
    ["triality", "--check", "bogus"],
    ["nosuchcommand"],
    ["wmf", "--format", "xml"],
])
def test_usage_errors(argv):
    assert call(*argv)[0] == EXIT_USAGE


def test_help_and_version():
    code, out, _ = call("--version")
    assert code == 0
    assert call("--help")[0] == 0


def test_table_format_renders():
    code, out, _ = call("kumar", "--case", "B", "--l", "2")
    assert code == 0 and "ratio" in out and not out.lstrip().startswith("{")


def test_json_output_is_byte_stable():
    a = call("fold", "--max-rank", "3", "--format", "json")[1]
    b = call("fold", "--max-rank", "3", "--format", "json")[1]
    assert a == b
    assert a == json.dumps(json.loads(a), sort_keys=True, indent=2) + "\n"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "schubert_smooth.cli", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and __version__ in proc.stdout
