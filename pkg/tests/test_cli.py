import io
import json
import sys

import pytest

from bettiforge.cli import main


def run_cli(argv, stdin_text=None, capsys=None):
    if stdin_text is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin_text)
        try:
            code = main(argv)
        finally:
            sys.stdin = old
    else:
        code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


EX_ADMISSIBLE = json.dumps({"D": [4, 5, 5, 9], "E": [9, 9, 9, 11, 11, 11, 13], "F": [12, 12, 12, 14]})
EX_REJECTED = json.dumps(
    {"D": [3, 6, 6, 6], "E": [8, 8, 8, 10, 10, 10, 12, 12, 12, 12], "F": [9, 11, 11, 11, 13, 13, 13]}
)


def test_check_admissible(capsys):
    code, out, _ = run_cli(["check", "-"], EX_ADMISSIBLE, capsys)
    assert code == 0
    data = json.loads(out)
    assert data["admissible"] is True and data["stage"] is None
    assert data["mci"] == [5, 5, 7]


def test_check_rejected_stage3(capsys):
    code, out, _ = run_cli(["check", "-"], EX_REJECTED, capsys)
    assert code == 1
    data = json.loads(out)
    assert data["stage"] == 3
    assert data["witness"] == "(6,6,6) ≱ (5,5,7)"
    assert data["beta_G"]["gens"] == [5, 5, 5, 7, 7, 7, 9]


def test_check_explain(capsys):
    code, out, err = run_cli(["check", "-", "--explain"], EX_REJECTED, capsys)
    assert code == 1
    assert "stage 3" in err


def test_check_malformed_json(capsys):
    code, _, err = run_cli(["check", "-"], "{truncated", capsys)
    assert code == 2 and "error" in err


def test_check_bad_shape(capsys):
    code, _, err = run_cli(["check", "-"], json.dumps({"D": [1, 2], "E": [], "F": []}), capsys)
    assert code == 2 and "error" in err


def test_check_from_file(tmp_path, capsys):
    path = tmp_path / "seq.json"
    path.write_text(EX_ADMISSIBLE, encoding="utf-8")
    code, out, _ = run_cli(["check", str(path)], capsys=capsys)
    assert code == 0 and json.loads(out)["admissible"]


def test_mci(capsys):
    code, out, _ = run_cli(["mci", "--gens", "[5,5,5,7,7,7,9]"], capsys=capsys)
    assert code == 0
    assert json.loads(out) == {"mci": [5, 5, 7], "theta": 15}


def test_mci_rejects_inadmissible(capsys):
    code, _, err = run_cli(["mci", "--gens", "[1,1,1,1,1]"], capsys=capsys)
    assert code == 2 and "error" in err


def test_gorenstein_check(capsys):
    code, out, _ = run_cli(["gorenstein-check", "--gens", "[2,2,2,2,2]"], capsys=capsys)
    assert code == 0 and json.loads(out)["theta"] == 5
    code, out, _ = run_cli(["gorenstein-check", "--gens", "[1,1,1,1,1]"], capsys=capsys)
    assert code == 1 and not json.loads(out)["admissible"]


def test_hilbert_resolution(capsys):
    code, out, _ = run_cli(
        ["hilbert", "--resolution", "[[2,2,2,2,2],[3,3,3,3,3],[5]]"], capsys=capsys
    )
    assert code == 0
    assert json.loads(out)["values"] == [1, 3, 1]


def test_hilbert_ci(capsys):
    code, out, _ = run_cli(["hilbert", "--ci", "[2,2,8]"], capsys=capsys)
    assert code == 0
    assert json.loads(out)["length"] == 32


def test_hilbert_needs_one_source(capsys):
    code, _, err = run_cli(["hilbert"], capsys=capsys)
    assert code == 2


def test_pfaffian_even(capsys):
    code, out, _ = run_cli(["pfaffian", "-"], json.dumps([[0, "a"], ["-a", 0]]), capsys)
    assert code == 0 and json.loads(out)["pfaffian"] == "a"


def test_pfaffian_odd(capsys):
    payload = json.dumps([[0, "a", "b"], ["-a", 0, "c"], ["-b", "-c", 0]])
    code, out, _ = run_cli(["pfaffian", "-"], payload, capsys)
    assert code == 0
    assert json.loads(out)["submaximal_pfaffians"] == ["c", "-b", "a"]


def test_pfaffian_invalid_matrix(capsys):
    code, _, err = run_cli(["pfaffian", "-"], json.dumps([[0, 1], [1, 0]]), capsys)
    assert code == 2


def test_link(capsys):
    code, out, _ = run_cli(
        ["link", "--gens", "[2,2,2,2,2]", "--theta", "5", "--ci", "[2,2,8]", "--extra", "[8]"],
        capsys=capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["d0"] == 7 and data["d"] == 19
    assert data["resolution"]["F"] == [10, 10, 10, 15]
    assert data["minimal"]["F"] == [10, 10, 10]


def test_link_degenerate(capsys):
    code, _, err = run_cli(
        ["link", "--gens", "[1,1,2,2,2]", "--theta", "4", "--ci", "[1,1,2]"], capsys=capsys
    )
    assert code == 2 and "degenerate" in err


def test_enumerate_stream(capsys):
    code, out, _ = run_cli(["enumerate", "--max-degree", "6", "--max-f", "2"], capsys=capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 12
    first = json.loads(lines[0])
    assert first == {"D": [1, 2, 2, 2], "E": [3, 3, 3, 3, 3], "F": [4, 4]}


def test_enumerate_byte_stable(capsys):
    _, out1, _ = run_cli(["enumerate", "--max-degree", "6", "--max-f", "2"], capsys=capsys)
    _, out2, _ = run_cli(["enumerate", "--max-degree", "6", "--max-f", "2"], capsys=capsys)
    assert out1 == out2


def test_enumerate_jobs_preserve_order(capsys):
    _, seq, _ = run_cli(["enumerate", "--max-degree", "7", "--max-f", "2"], capsys=capsys)
    _, par, _ = run_cli(
        ["enumerate", "--max-degree", "7", "--max-f", "2", "--jobs", "2"], capsys=capsys
    )
    assert seq == par


def test_enumerate_bad_bounds(capsys):
    code, _, _ = run_cli(["enumerate", "--max-degree", "6", "--max-f", "1"], capsys=capsys)
    assert code == 2


def test_verify_structure(tmp_path, capsys):
    import random

    from bettiforge.pfaffian import random_graded_alternating

    m = random_graded_alternating([2] * 5, random.Random(3))
    payload = {
        "entries": m.to_poly_matrix().to_lists(),
        "twists": [2] * 5,
        "variables": ["x1", "x2", "x3"],
    }
    path = tmp_path / "matrix.json"
    path.write_text(json.dumps(payload), encoding="utf-8")
    code, out, _ = run_cli(
        ["verify-structure", "--matrix", str(path), "--g-rows", "1,2,3"], capsys=capsys
    )
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert data["twist_multisets"][1] == [1, 2, 2, 2]


def test_verify_structure_needs_twists(tmp_path, capsys):
    path = tmp_path / "matrix.json"
    path.write_text(json.dumps([[0, "a"], ["-a", 0]]), encoding="utf-8")
    code, _, err = run_cli(
        ["verify-structure", "--matrix", str(path), "--g-rows", "1,2,3"], capsys=capsys
    )
    assert code == 2 and "twists" in err


def test_seed_env_override(monkeypatch, capsys):
    monkeypatch.setenv("BETTIFORGE_SEED", "not-an-int")
    code, _, err = run_cli(["enumerate", "--max-degree", "6", "--max-f", "2"], capsys=capsys)
    assert code == 2 and "BETTIFORGE_SEED" in err
