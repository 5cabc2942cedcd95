"""Exit codes, output formats, and determinism of the command line."""

import json

import pytest

from cycloschur import cli


def run_capture(capsys, argv):
    code = cli.run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_phi_flags_the_exceptional_degree(capsys):
    code, out, _ = run_capture(capsys, ["phi", "--n", "105", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "1"
    assert data["all_in_unit_range"] is False
    assert data["offending_degrees"] == [7, 41]
    assert data["coefficients"][7] == -2


def test_phi_small_cases(capsys):
    code, out, _ = run_capture(capsys, ["phi", "--n", "12", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["all_in_unit_range"] is True
    assert data["coefficients"] == [1, 0, -1, 0, 1]
    code, out, _ = run_capture(capsys, ["phi", "--n", "1"])
    assert code == 0
    assert "coefficients (ascending): -1 1" in out


def test_phi_usage_error(capsys):
    code, _, err = run_capture(capsys, ["phi", "--n", "0"])
    assert code == 2
    assert "positive" in err


def test_schur_table_rows_and_summary(capsys):
    code, out, _ = run_capture(
        capsys, ["schur-table", "--n", "105", "--max-len", "7", "--max-part", "1",
                 "--format", "json"])
    assert code == 0
    data = json.loads(out)
    rows = {tuple(r["partition"]): r["value"] for r in data["rows"]}
    assert rows[(1,) * 7] == 2
    assert rows[()] == 1
    assert data["value_counts"]["2"] == 1


def test_schur_table_empty_box(capsys):
    code, out, _ = run_capture(
        capsys, ["schur-table", "--n", "9", "--max-len", "0", "--max-part", "0",
                 "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["rows"] == [{"partition": [], "value": 1}]


def test_schur_table_length_hypothesis_usage_error(capsys):
    code, _, err = run_capture(
        capsys, ["schur-table", "--n", "6", "--max-len", "9", "--max-part", "2"])
    assert code == 2
    assert "phi(6) = 2" in err


def test_verify_pass_and_fail_exit_codes(capsys):
    code, out, _ = run_capture(capsys, ["verify", "--n", "15", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["direct"]["pass"] is True and data["structural"]["pass"] is True
    code, out, _ = run_capture(capsys, ["verify", "--n", "105", "--format", "json"])
    assert code == 1
    data = json.loads(out)
    assert data["direct"]["counterexample"]["partition"] == [1] * 7


def test_tu_check_paths(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text('[["1","-1","0"],["0","1","-1"]]')
    code, out, _ = run_capture(capsys, ["tu-check", "--matrix", str(good)])
    assert code == 0
    bad = tmp_path / "bad.json"
    bad.write_text('[["1","1"],["-1","1"]]')
    code, out, _ = run_capture(capsys, ["tu-check", "--matrix", str(bad),
                                        "--format", "json"])
    assert code == 1
    data = json.loads(out)
    assert data["totally_unimodular"] is False
    assert data["witness"]["det"] == "2"


def test_tu_check_error_reports(tmp_path, capsys):
    broken = tmp_path / "broken.json"
    broken.write_text('[["1", "2"\n  ]')
    code, _, err = run_capture(capsys, ["tu-check", "--matrix", str(broken)])
    assert code == 2
    assert "line" in err
    ragged = tmp_path / "ragged.json"
    ragged.write_text('[["1","2"],["3"]]')
    code, _, err = run_capture(capsys, ["tu-check", "--matrix", str(ragged)])
    assert code == 2
    assert "row 2" in err
    notint = tmp_path / "notint.json"
    notint.write_text('[["1","x"]]')
    code, _, err = run_capture(capsys, ["tu-check", "--matrix", str(notint)])
    assert code == 2
    assert "column 2" in err
    code, _, err = run_capture(capsys, ["tu-check", "--matrix", str(tmp_path / "no.json")])
    assert code == 2
    assert "not found" in err


def test_witness_found_and_not_found(capsys):
    code, out, _ = run_capture(capsys, ["witness", "2", "4", "6", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["found"] is True
    assert data["witness"]["abs_det_a"] != data["witness"]["abs_det_b"]
    code, out, _ = run_capture(capsys, ["witness", "2", "2", "--format", "json"])
    assert code == 1
    assert json.loads(out)["found"] is False


def test_network_demo(capsys):
    code, out, _ = run_capture(capsys, ["network-demo", "2", "3"])
    assert code == 0
    assert "transpose matches: true" in out
    code, out, _ = run_capture(capsys, ["network-demo", "1", "1", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["matrix"] == [["1", "-1", "-1"]]
    assert data["transpose_matches"] is True


def test_json_output_is_byte_deterministic(capsys, monkeypatch):
    args = ["schur-table", "--n", "15", "--max-len", "3", "--max-part", "3",
            "--format", "json"]
    _, first, _ = run_capture(capsys, args)
    _, second, _ = run_capture(capsys, args)
    assert first == second
    monkeypatch.setenv("CYCLOSCHUR_THREADS", "4")
    _, threaded, _ = run_capture(capsys, args)
    assert threaded == first
    monkeypatch.setenv("CYCLOSCHUR_THREADS", "1")
    _, single, _ = run_capture(capsys, args)
    assert single == first


def test_out_file_and_csv(tmp_path, capsys):
    target = tmp_path / "phi.csv"
    code, out, _ = run_capture(capsys, ["phi", "--n", "12", "--format", "csv",
                                        "--out", str(target)])
    assert code == 0
    assert out == ""
    lines = target.read_text().splitlines()
    assert lines[0] == "degree,coefficient,inverse_series_coefficient"
    assert len(lines) == 6


def test_argparse_usage_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.run(["schur-table", "--n", "15"])      # missing required flags
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.run(["no-such-command"])
    assert exc.value.code == 2
