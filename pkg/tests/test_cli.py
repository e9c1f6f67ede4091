"""End-to-end command-line runs, in process, against the JSON report contract."""

from __future__ import annotations

import json

from fgx import bpcore, cli


def run(capsys, *argv) -> tuple[int, dict]:
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def strip_timing(rep: dict) -> dict:
    rep = {k: v for k, v in rep.items() if k != "seconds"}
    if "checks" in rep:
        rep["checks"] = [strip_timing(c) for c in rep["checks"]]
    return rep


def write_program(tmp_path, bits: str):
    n = (len(bits) - 1).bit_length()
    bp = bpcore.bp_from_truth_table(bpcore.TruthTable(n=n, bits=bits))
    path = tmp_path / f"f_{bits}.json"
    path.write_text(bpcore.serialize_bp(bp))
    return path


def test_bp_eval_and_tt(tmp_path, capsys):
    bp_file = write_program(tmp_path, "0111")
    code, rep = run(capsys, "bp", "eval", "--bp", str(bp_file), "--assignment", "11", "--brute")
    assert code == 0 and rep["value"] == 1 and rep["brute"] == 1
    assert "seconds" in rep
    code, rep = run(capsys, "bp", "tt", "--bp", str(bp_file))
    assert code == 0 and rep["bits"] == "0111"


def test_bp_eval_bad_assignment_is_structured_error(tmp_path, capsys):
    bp_file = write_program(tmp_path, "0111")
    code, rep = run(capsys, "bp", "eval", "--bp", str(bp_file), "--assignment", "1")
    assert code == 2
    assert rep["schema"] == "fgx-report/1" and "error" in rep


def test_bp_random_deterministic_modulo_timing(capsys):
    code1, rep1 = run(capsys, "bp", "random", "--n", "3", "--seed", "5")
    code2, rep2 = run(capsys, "bp", "random", "--n", "3", "--seed", "5")
    assert code1 == code2 == 0
    assert strip_timing(rep1) == strip_timing(rep2)


def test_bp_random_out_then_validate(tmp_path, capsys):
    target = tmp_path / "bp.json"
    code, rep = run(capsys, "bp", "random", "--n", "2", "--seed", "1", "--out", str(target))
    assert code == 0 and rep["out"] == str(target)
    code, rep = run(capsys, "bp", "validate", "--bp", str(target))
    assert code == 0 and rep["ok"]


def test_encode_table(capsys):
    code, rep = run(capsys, "encode", "--table", "1011")
    assert code == 0
    assert rep["matrix"]["rows"] == ["00", "11", "10"]


def test_ppedit_promise(tmp_path, capsys):
    code, rep = run(capsys, "encode", "--table", "1011", "--out", str(tmp_path / "m.json"))
    assert code == 0
    code, rep = run(capsys, "ppedit", "promise", "--matrix", str(tmp_path / "m.json"))
    assert code == 0 and rep["promise"] == "one"
    code, rep = run(
        capsys, "ppedit", "eval", "--matrix", str(tmp_path / "m.json"), "--mu", "0"
    )
    assert code == 0 and rep["min_cost"] == 4


def test_reduce_decide_constant_one(tmp_path, capsys):
    bp_file = write_program(tmp_path, "1111")
    code, rep = run(capsys, "reduce", "decide", "--bp", str(bp_file))
    assert code == 0
    assert rep["verdict"] == 1 and rep["promise"] == "one"


def test_reduce_build_and_verify(tmp_path, capsys):
    bp_file = write_program(tmp_path, "0110")
    code, rep = run(capsys, "reduce", "build", "--bp", str(bp_file))
    assert code == 0 and rep["manifest"]["x_len"] == 1768
    code, rep = run(capsys, "reduce", "verify", "--bp", str(bp_file), "--marker-width", "2")
    assert code == 0 and rep["pairs_checked"] == 6


def test_editdist_commands(capsys):
    code, rep = run(capsys, "editdist", "dist", "--a", "kitten", "--b", "sitting")
    assert code == 0 and rep["distance"] == 3
    code, rep = run(capsys, "editdist", "banded", "--a", "kitten", "--b", "sitting", "--bound", "2")
    assert code == 0 and rep["distance"] is None and rep["exceeded"]


def test_convert_commands(capsys):
    code, rep = run(capsys, "convert", "p2c", "--path", "[[1,1],[1,2]]", "--K", "3", "--L", "2")
    assert code == 0 and rep["coarse"] == [[[1], [1]], [[2], [2]]]
    code, rep = run(capsys, "convert", "c2p", "--coarse", "[[[1],[1]],[[2],[2]]]", "--K", "3")
    assert code == 0 and rep["path"] == [[1, 1], [1, 2]]
    code, rep = run(capsys, "convert", "classify", "--coarse", "[[[1],[2]]]", "--K", "3", "--L", "2")
    assert code == 0 and rep["labels"] == ["low"]


def test_ov_commands(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 2 1\n1 2 0\n")
    code, rep = run(capsys, "ov", "count", "--cnf", str(cnf), "--brute")
    assert code == 0 and rep["orthogonal_pairs"] == 3 and rep["sat_count_brute"] == 3
    code, rep = run(capsys, "ov", "parity", "--cnf", str(cnf))
    assert code == 0 and rep["parity"] == 1
    code, rep = run(capsys, "ov", "bit", "--cnf", str(cnf), "--side", "u", "--index", "0", "--clause", "0")
    assert code == 0 and rep["bit"] == 1


def test_adv_commands(capsys):
    code, rep = run(capsys, "adv", "gen", "--k", "2", "--t", "0", "--family", "X", "--seed", "2")
    assert code == 0 and rep["member"] and len(rep["rows"]) == 4
    code, rep = run(capsys, "adv", "dyck", "--row", "0101")
    assert code == 0 and rep["accepted"]


def test_corpus_make(tmp_path, capsys):
    out = tmp_path / "corpus"
    code, rep = run(capsys, "corpus", "make", "--n", "2", "--count", "3", "--out", str(out))
    assert code == 0 and rep["count"] == 3
    for name in rep["files"]:
        bpcore.parse_bp((out / name).read_text())


def test_verify_all_subset(capsys):
    code, rep = run(
        capsys,
        "verify", "all",
        "--check", "decision-equivalence",
        "--n", "2",
        "--seeds", "4",
    )
    assert code == 0 and rep["ok"]
    assert rep["checks"][0]["programs"] == 4
    assert rep["n"] == 2 and rep["seeds"] == 4
