import json
from fractions import Fraction

import pytest

from projarea import serialize
from projarea.cli import main
from projarea.wedge import WedgeVector, wedge


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, [json.loads(line) for line in out.splitlines() if line.strip()], err


def test_check_t2_boundary(capsys):
    code, rows, _ = run(capsys, "check", "t2", "1,1,1,1,1,4")
    assert code == 0
    assert rows[0]["status"] == "Boundary" and rows[0]["witness"].startswith("tight")


def test_check_outside_and_batch(capsys):
    code, rows, _ = run(capsys, "check", "t2", "1,1,1,1,1,1", "1,1,1,1,1,5")
    assert code == 1
    assert [r["status"] for r in rows] == ["Interior", "Outside"]


def test_check_t1_and_lorentzian(capsys):
    assert run(capsys, "check", "t1", "1,1,1,1,1,39/10")[0] == 1
    code, rows, _ = run(capsys, "check", "lorentzian", "1,1,1,1,1,4")
    assert code == 0 and rows[0]["lorentzian"] is True


def test_input_errors(capsys):
    assert run(capsys, "check", "t2", "1,1,1")[0] == 2
    assert run(capsys, "check", "t2", "1,1,1,1,1,abc")[0] == 2
    assert run(capsys, "check", "t2")[0] == 2
    assert run(capsys, "realize", "pair", "1,1,1,1,1,5")[0] == 2
    assert run(capsys, "grass", "--k", "1", "--n", "4", "--a1", "1", "--a2", "1")[0] == 2
    assert run(capsys, "check", "t2", "--input", "/nonexistent/file")[0] == 2
    with pytest.raises(SystemExit):
        main(["bogus"])


def test_realize_pair_writes_certificate(capsys, tmp_path):
    out = tmp_path / "cert.json"
    code, rows, _ = run(capsys, "realize", "pair", "1,1,1,1,1,1", "--out", str(out))
    assert code == 0 and rows[0]["file"] == str(out)
    cert = serialize.loads(out.read_text())
    assert cert.recomputed == WedgeVector.of([1] * 6) == wedge(cert.A, cert.B)


def test_realize_batch_writes_directory(capsys, tmp_path):
    vectors = tmp_path / "vectors.txt"
    vectors.write_text("# header\n1,1,1,1,1,4\n0,1,1,1,1,0\n")
    code, rows, _ = run(capsys, "realize", "pair", "--input", str(vectors), "--out", str(tmp_path / "certs"))
    assert code == 0 and len(rows) == 2
    files = sorted((tmp_path / "certs").iterdir())
    assert [f.name for f in files] == ["certificate-0000.json", "certificate-0001.json"]
    for f, row in zip(files, rows):
        cert = serialize.loads(f.read_text())
        assert cert.verify() and row["recomputed"] == ",".join(map(str, cert.target))


def test_realize_self(capsys):
    code, rows, _ = run(capsys, "realize", "self-interior", "3,2,2,2,2,3", "--tolerance", "1e-9")
    assert code == 0 and rows[0]["residual"] <= 1e-9
    code, rows, _ = run(capsys, "realize", "self-boundary", "25/16")
    assert rows[0]["exact"] is True and rows[0]["proportionality"] == "64/25"
    code, rows, _ = run(capsys, "realize", "self-boundary", "2", "--rescale")
    assert rows[0]["proportionality"] is None and not rows[0]["exact"]
    assert run(capsys, "realize", "self-boundary", "1/2")[0] == 2


def test_wedge_command(capsys, tmp_path):
    code, rows, _ = run(capsys, "wedge", "--a", "0,0,0,0;1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1")
    assert code == 0 and rows[0]["wedge"] == "1,1,1,1,1,1"
    poly = tmp_path / "a.json"
    poly.write_text(json.dumps([["0", "0", "0", "0"], ["1", "1", "0", "0"]]))
    code, rows, _ = run(capsys, "wedge", "--a", str(poly), "--b", "0,0,0,0;0,0,1,1")
    assert rows[0]["wedge"] == "0,1,1,1,1,0"


def test_classify_and_equiv(capsys):
    code, rows, _ = run(capsys, "classify", "zero-orbit", "5,0,0,0,0,0")
    assert code == 0 and rows[0]["representative"] == "1,0,0,0,0,0"
    assert rows[0]["witness"]["lambda"] == "5"
    assert run(capsys, "classify", "zero-orbit", "1,1,1,1,1,1")[0] == 2
    code, rows, _ = run(capsys, "equiv", "1,1,1,1,1,1", "7,7,7,7,7,7")
    assert code == 0 and rows[0]["equivalent"]
    assert run(capsys, "equiv", "1,1,1,1,1,1", "1,1,1,1,1,2", "--over", "r")[0] == 1


def test_ci_command(capsys):
    code, rows, _ = run(capsys, "ci", "1,1,1,1,1,1")
    assert code == 0 and rows[0]["mu"] == "2" and rows[0]["b"] == "1,1,1,2"
    assert run(capsys, "ci", "1,1,1,1,1,39/10")[0] == 1


def test_steenrod_command(capsys, tmp_path):
    assert run(capsys, "steenrod", "--dims", "2,2", "--matrix", "1,1;1,1")[0] == 0
    assert run(capsys, "steenrod", "--dims", "1,1,1,1", "--matrix", "1,0,0,0;0,0,0,0;0,0,0,0;0,0,0,0")[0] == 2
    assert run(capsys, "steenrod", "--dims", "1,1", "--matrix", "0,1,1;1,0,1;1,1,0")[0] == 2
    f = tmp_path / "pm.json"
    f.write_text(json.dumps({"type": "pm_class", "dims": [1, 1, 1, 1],
                             "matrix": [["0", "1", "1", "1"], ["1", "0", "1", "1"],
                                        ["1", "1", "0", "5"], ["1", "1", "5", "0"]]}))
    assert run(capsys, "steenrod", "--input", str(f))[0] == 1


def test_grass_command(capsys):
    assert run(capsys, "grass", "--k", "2", "--n", "4", "--a1", "0", "--a2", "0")[0] == 1
    code, rows, _ = run(capsys, "grass", "--k", "3", "--n", "6", "--a1", "3", "--a2", "1",
                        "--witness-trials", "3")
    assert code == 0 and rows[0]["witness_check"] is True


def test_sample_is_byte_deterministic(capsys):
    main(["sample", "--stratum", "boundary", "--count", "8", "--seed", "4"])
    first = capsys.readouterr().out
    main(["sample", "--stratum", "boundary", "--count", "8", "--seed", "4"])
    assert capsys.readouterr().out == first and len(first.splitlines()) == 8


def test_batch_realize_is_byte_deterministic(capsys, tmp_path):
    main(["sample", "--stratum", "interior", "--count", "3", "--seed", "9"])
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("\n".join(json.loads(l)["vector"] for l in capsys.readouterr().out.splitlines()))
    outputs = []
    for name in ("a", "b"):
        main(["realize", "pair", "--input", str(corpus), "--out", str(tmp_path / name)])
        capsys.readouterr()
        outputs.append([f.read_bytes() for f in sorted((tmp_path / name).iterdir())])
    assert outputs[0] == outputs[1] and len(outputs[0]) == 3


def test_tsv_output(capsys):
    main(["--format", "tsv", "check", "t2", "1,1,1,1,1,3", "1,1,1,1,1,4"])
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split("\t") == ["vector", "region", "status", "witness"]
    assert lines[1].split("\t")[2] == "Interior" and lines[2].split("\t")[2] == "Boundary"


def test_stdin_input(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("1,1,1,1,1,1\n1,1,1,1,1,5\n"))
    code, rows, _ = run(capsys, "check", "t2", "--input", "-")
    assert code == 1 and len(rows) == 2
