"""End-to-end CLI behaviour, file formats, exit codes and determinism."""

import json

import pytest

from oocgen.cli import main
from conftest import canonical_sidon_f64
from oocgen import CyclicSubspaceCode, subspace_to_dict


@pytest.fixture(scope="module")
def q3_run(tmp_path_factory):
    out = tmp_path_factory.mktemp("q3") / "run"
    code = main(["construct", "--q", "3", "--k", "2", "--s", "1",
                 "--out", str(out)])
    assert code == 0
    return out


def test_construct_summary(capsys, tmp_path):
    out = tmp_path / "x"
    rc = main(["construct", "--q", "3", "--k", "2", "--s", "1",
               "--out", str(out)])
    captured = capsys.readouterr()
    assert rc == 0
    assert "(80,9,3) size=4" in captured.out
    assert "pass" in captured.out


def test_construct_writes_all_files(q3_run):
    for suffix in [".ooc", ".oos.json", ".code.json", ".report.json"]:
        assert (q3_run.parent / (q3_run.name + suffix)).exists()


def test_construct_is_deterministic(q3_run, tmp_path):
    out2 = tmp_path / "again"
    assert main(["construct", "--q", "3", "--k", "2", "--s", "1",
                 "--out", str(out2)]) == 0
    for suffix in [".ooc", ".oos.json", ".code.json", ".report.json"]:
        a = (q3_run.parent / (q3_run.name + suffix)).read_bytes()
        b = (out2.parent / (out2.name + suffix)).read_bytes()
        assert a == b, f"{suffix} differs between runs"


def test_ooc_file_shape(q3_run):
    lines = (q3_run.parent / (q3_run.name + ".ooc")).read_text().splitlines()
    assert lines[0] == "# n=80 w=9 lambda=3 size=4"
    assert len(lines) == 5
    for line in lines[1:]:
        assert len(line) == 80 and line.count("1") == 9


def test_verify_pass(q3_run):
    assert main(["verify", str(q3_run) + ".ooc"]) == 0


def test_verify_oos_json_with_lambda(q3_run):
    assert main(["verify", str(q3_run) + ".oos.json", "--lambda", "3"]) == 0


def test_verify_fails_with_tighter_lambda(q3_run, capsys):
    rc = main(["verify", str(q3_run) + ".ooc", "--lambda", "2"])
    captured = capsys.readouterr()
    assert rc == 1
    report = json.loads(captured.out)
    assert not report["pass"]
    assert max(report["max_auto"], report["max_cross"]) == 3


def test_verify_empty_file_is_data_error(tmp_path):
    empty = tmp_path / "empty.ooc"
    empty.write_text("")
    assert main(["verify", str(empty)]) == 2


def test_verify_oos_without_lambda_is_usage_error(q3_run):
    assert main(["verify", str(q3_run) + ".oos.json"]) == 2


def test_construct_q2_is_usage_error(capsys):
    assert main(["construct", "--q", "2", "--k", "2", "--s", "1"]) == 2
    assert "q >= 3" in capsys.readouterr().err


def test_construct_bad_s_is_usage_error():
    assert main(["construct", "--q", "3", "--k", "2", "--s", "2"]) == 2


def test_construct_from_code_file(tmp_path, capsys):
    # generic path: a user-supplied single-orbit code over F_64
    U = canonical_sidon_f64()
    code = CyclicSubspaceCode(U.field, 2, (U,))
    path = tmp_path / "sidon.json"
    path.write_text(json.dumps(code.to_dict()))
    out = tmp_path / "fromfile"
    rc = main(["construct", "--code", str(path), "--out", str(out)])
    captured = capsys.readouterr()
    assert rc == 0
    assert "(63,8,2) size=7" in captured.out
    assert main(["verify", str(out) + ".ooc"]) == 0


def test_bound_command(capsys):
    assert main(["bound", "63", "8", "2"]) == 0
    assert capsys.readouterr().out.strip() == "11"
    assert main(["bound", "8", "4", "2"]) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_bound_with_size(capsys):
    assert main(["bound", "63", "8", "2", "--size", "7"]) == 0
    assert "7/11" in capsys.readouterr().out


def test_bound_rejects_lam_ge_w(capsys):
    assert main(["bound", "8", "4", "5"]) == 2


def test_table_command(capsys):
    assert main(["table", "3,2", "5,2"]) == 0
    out = capsys.readouterr().out
    assert "80" in out and "624" in out


def test_field_info(capsys):
    assert main(["field-info", "--q", "3", "--m", "4"]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["p"] == 3 and info["e"] == 4 and info["N"] == 80
    assert info["subfield_orders"] == [3, 9, 81]


def test_construct_json_summary(tmp_path, capsys):
    out = tmp_path / "j"
    rc = main(["construct", "--q", "3", "--k", "2", "--s", "1",
               "--out", str(out), "--format", "json"])
    assert rc == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["params"]["n"] == 80 and blob["report"]["pass"]
