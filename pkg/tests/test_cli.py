import json
import subprocess
import sys

import pytest

from qubatch.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def code733(tmp_path, capsys):
    path = tmp_path / "c733.json"
    assert run(capsys, "build", "--p", 2, "--k", 3, "--dims", 1, "--out", path)[0] == 0
    return path


def test_subgroups(capsys):
    code, out, _ = run(capsys, "subgroups", "--p", 2, "--k", 4, "--dim", 2)
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 35 and len(data["subspaces"]) == 35

    code, out, _ = run(capsys, "subgroups", "--p", 2, "--k", 3)
    assert json.loads(out)["counts"] == {"1": 7, "2": 7}

    code, out, _ = run(capsys, "subgroups", "--p", 3, "--k", 2, "--format", "csv")
    assert out.splitlines() == ["dim,index,subspace", "1,0,01", "1,1,10", "1,2,11", "1,3,12"]

    code, out, _ = run(capsys, "subgroups", "--k", 3, "--format", "text")
    assert out.splitlines()[0] == "p=2 k=3 counts 1:7 2:7"


def test_subgroups_errors(capsys):
    assert run(capsys, "subgroups", "--p", 2, "--k", 4, "--dim", 4)[0] == 2
    assert run(capsys, "subgroups", "--p", 4, "--k", 2)[0] == 2
    assert run(capsys, "subgroups", "--k", 4, "--dim", 2, "--cap", 10)[0] == 3


def test_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("QUBATCH_CAP", "10")
    assert run(capsys, "subgroups", "--k", 4, "--dim", 2)[0] == 3
    assert run(capsys, "subgroups", "--k", 4, "--dim", 2, "--cap", 100)[0] == 0
    monkeypatch.setenv("QUBATCH_CAP", "100")
    assert run(capsys, "subgroups", "--k", 4, "--dim", 2)[0] == 0


def test_build(capsys, tmp_path, code733):
    data = json.loads(code733.read_text())
    assert data["params"]["n"] == 7 and data["params"]["t"] == 3 and data["params"]["r"] == 2
    assert data["plan"] == [[0, 1], [2, 3], [4, 5]]

    out_path = tmp_path / "c65.json"
    code, out, _ = run(capsys, "build", "--k", 4, "--full", "--out", out_path)
    assert code == 0 and out.strip() == "(n,k,t,r) = (65,4,32,2)"

    code, out, _ = run(capsys, "build", "--p", 3, "--k", 2, "--dims", 1)
    data = json.loads(out)
    assert data["positions"] == ["01", "10", "11", "12"] and data["alphabets"] == [3] * 4

    assert run(capsys, "build", "--k", 3)[0] == 2
    assert run(capsys, "build", "--k", 3, "--dims", 3)[0] == 2


def test_encode_decode(capsys, code733):
    code, out, _ = run(capsys, "encode", "--code", code733, "--info", "000")
    assert out.strip() == "0,0,0,0,0,0,0"
    code, out, _ = run(capsys, "encode", "--code", code733, "--info", "011")
    word = out.strip()
    code, out, _ = run(capsys, "decode", "--code", code733, "--word", word)
    assert code == 0 and out.strip() == "011"
    code, out, _ = run(capsys, "decode", "--code", code733, "--word", word, "--positions", "2,5")
    assert out.strip() == "011"


def test_decode_corruption_exit_code(capsys, code733):
    _, out, _ = run(capsys, "encode", "--code", code733, "--info", "011")
    labels = [int(x) for x in out.strip().split(",")]
    # the other six symbols fix g, so any change to one symbol is inconsistent
    for delta in (1, 2, 3):
        bad = list(labels)
        bad[3] = (bad[3] + delta) % 4
        code, _, err = run(capsys, "decode", "--code", code733, "--word", ",".join(map(str, bad)))
        assert code == 4 and "not a codeword" in err
    assert run(capsys, "decode", "--code", code733, "--word", "9,0,0,0,0,0,0")[0] == 4
    assert run(capsys, "decode", "--code", code733, "--word", "0,0")[0] == 2


def test_serve(capsys, code733):
    _, out, _ = run(capsys, "encode", "--code", code733, "--info", "011")
    word = out.strip()
    code, out, _ = run(capsys, "serve", "--code", code733, "--word", word, "--request", "2,2,2")
    assert code == 0
    assert json.loads(out)["values"] == [1, 1, 1]
    assert run(capsys, "serve", "--code", code733, "--word", word, "--request", "1,2,3,1")[0] == 2


def test_match(capsys):
    code, out, _ = run(capsys, "match", "--k", 4, "--m", 1)
    assert code == 0 and json.loads(out)["matching_size"] == 15
    _, out, _ = run(capsys, "match", "--k", 4, "--m", 2)
    data = json.loads(out)
    assert data["matching_size"] == 17 and data["components"] == 1
    _, out, _ = run(capsys, "match", "--k", 3, "--m", 1)
    assert json.loads(out)["matching_size"] == 7
    _, out, _ = run(capsys, "match", "--k", 2, "--m", 1, "--format", "dot")
    assert "[style=bold]" in out
    _, out, _ = run(capsys, "match", "--k", 4, "--m", 2, "--format", "csv")
    assert out.splitlines() == ["degree,count", "16,35"]
    assert run(capsys, "match", "--k", 3, "--m", 3)[0] == 2


def test_verify(capsys, tmp_path, code733):
    code, out, err = run(capsys, "verify", "--code", code733)
    assert code == 0 and json.loads(out)["passed"]
    assert "PASS quasi_uniform" in err

    full = tmp_path / "c65.json"
    run(capsys, "build", "--k", 4, "--full", "--out", full)
    code, out, _ = run(capsys, "verify", "--code", full, "--max-subset", 2, "--sample")
    report = json.loads(out)
    assert code == 0 and report["sampled"] and report["seed"] == 0x5EED
    code, out, _ = run(capsys, "verify", "--code", full, "--max-subset", 2)
    assert code == 1


def test_verify_rejects_nontrivial_descriptor(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"p": 2, "k": 3, "positions": ["100;010", "100;001"]}))
    code, _, err = run(capsys, "verify", "--code", path)
    assert code == 2 and "nontrivial" in err
    assert run(capsys, "verify", "--code", tmp_path / "missing.json")[0] == 2


def test_outputs_are_byte_identical(capsys, tmp_path):
    cmds = [
        ["subgroups", "--k", 4],
        ["build", "--k", 4, "--full"],
        ["match", "--k", 4, "--m", 2, "--format", "dot"],
    ]
    for cmd in cmds:
        a, b = tmp_path / "a.out", tmp_path / "b.out"
        run(capsys, *cmd, "--out", a)
        run(capsys, *cmd, "--out", b)
        assert a.read_bytes() == b.read_bytes()
    c = tmp_path / "c.json"
    run(capsys, "build", "--k", 4, "--full", "--out", c)
    run(capsys, "verify", "--code", c, "--max-subset", 2, "--sample", "--out", tmp_path / "v1")
    run(capsys, "verify", "--code", c, "--max-subset", 2, "--sample", "--out", tmp_path / "v2")
    assert (tmp_path / "v1").read_bytes() == (tmp_path / "v2").read_bytes()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qubatch", "subgroups", "--k", "3", "--format", "text"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("p=2 k=3 counts 1:7 2:7")
