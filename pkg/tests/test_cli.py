import json
import subprocess
import sys

import pytest

from tlinks.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


@pytest.fixture
def braid_files(tmp_path):
    a = tmp_path / "a.braid"
    b = tmp_path / "b.braid"
    a.write_text("strands: 2\n1 1 1\n")
    b.write_text("strands: 5\n3 4 2 3 1 2\n")
    return str(a), str(b)


def test_bunch(capsys):
    out = run_json(capsys, "bunch", "--words", "x^2 y x y")
    assert out["permutation"] == [3, 4, 5, 1, 2]
    assert out["vector"] == [[2, 3]] and out["vector_text"] == "<2^3>"
    assert out["trip"] == 2 and out["words"] == ["x^2 y x y"]


def test_bunch_from_vector(capsys):
    out = run_json(capsys, "bunch", "--vector", "<2^2>")
    assert out["components"] == 2 and out["words"] == ["x y", "x y"]


def test_bunch_from_permutation(capsys):
    out = run_json(capsys, "bunch", "--permutation", "3,1,2")
    assert out["p"] == 1 and out["words"] == ["x y^2"]


def test_bunch_words_file_json(capsys, tmp_path):
    f = tmp_path / "w.json"
    f.write_text('{"words": [[[10, 2], [5, 2], [7, 6], [2, 2], [5, 3]]]}')
    out = run_json(capsys, "bunch", "--words-file", str(f))
    assert out["trip"] == 5 and out["word_trip"] == 5


def test_trip(capsys):
    assert run_json(capsys, "trip", "--vector", "<4^3, 5^2, 7^2>") == {"trip": 4}
    assert run_json(capsys, "trip", "--words", "x^10 y^2 x^5 y^2 x^7 y^6 x^2 y^2 x^5 y^3") == {"trip": 5}


def test_bound(capsys):
    out = run_json(capsys, "bound", "--gen", "T((4,3),(5,2),(7,9);d=0)", "--n", "1")
    assert out["beta"] == 4 and out["multiplier"] == 336 and out["bound"] == 341.0204 and out["n_used"] == 1
    out = run_json(capsys, "bound", "--trip", "5")
    assert out["multiplier"] == 480 and out["breakdown"]["side_loops"] == 20
    out = run_json(capsys, "bound", "--gen", "T((4,3),(5,2),(7,9);d=0)", "--manifold")
    assert out["bound"] <= 341.0204


def test_build(capsys, tmp_path):
    target = tmp_path / "t.braid"
    out = run_json(capsys, "build", "--tn", "T^2((2,3),(2;0))", "-o", str(target))
    assert out == {"components": 1, "letters": [1, 1, 1, 1, 1], "strands": 2}
    assert target.read_text() == "strands: 2\n1 1 1 1 1\n"
    assert run_json(capsys, "build", "--vector", "<2^3>")["letters"] == [3, 4, 2, 3, 1, 2]
    assert run_json(capsys, "build", "--gen", "T((2,3),(4,-1);d=1)")["letters"] == [2, 2, 2, -4, -3, -2]
    assert run_json(capsys, "build", "--tlink", "T((2,2),(3,1))")["letters"] == [1, 1, 1, 2]


def test_convert(capsys):
    out = run_json(capsys, "convert", "--gen", "T((2,3),(4,6);d=0)", "--n", "1")
    assert out["output"]["notation"] == "T^{2}((2,3),(4,2),(4;0))"
    out = run_json(capsys, "convert", "--tn", "T^{-2}((2,3),(4;0))")
    assert out["output"] == {"d": 0, "kind": "gen", "last": [4, -4], "notation": "T((2,3),(4,-4);d=0)", "pairs": [[2, 3]]}
    out = run_json(capsys, "convert", "--tn", "T^{0}((3;2))")
    assert out["output"] == {"components": 5, "kind": "unlink", "notation": "unlink(5)"}
    out = run_json(capsys, "convert", "--tn", "T^{-2}((1;3))")
    assert out["output"]["notation"] == "T((2,1);d=3)"
    out = run_json(capsys, "convert", "--tn", "T^{2}((4,3),(5,2),(7;0))", "--associated")
    assert out["output"]["notation"] == "T((4,3),(5,2))"
    out = run_json(capsys, "convert", "--vector", "<2^3>", "--n", "2")
    assert out["output"]["notation"] == "T^{2}((2,3),(2;0))"
    out = run_json(capsys, "convert", "--tlink", "T((2,3))", "--n", "-1", "--r-prime", "4")
    assert out["associated_trip"] == 4


def test_normalize(capsys, tmp_path):
    out = run_json(capsys, "normalize", "--vector", "<2^2, 3^1>")
    assert out["braid"]["letters"] == [1, 1, 1, 2]


def test_verify_and_export(capsys, braid_files):
    a, b = braid_files
    out = run_json(capsys, "verify", "--braid-a", a, "--braid-b", b)
    assert out["verdict"] == "consistent" and out["components"] == [1, 1]
    out = run_json(capsys, "verify", "--braid-a", a, "--braid-b", b, "--method", "states")
    assert out["verdict"] == "consistent"
    out = run_json(capsys, "export", "--braid", a, "--jones")
    assert out["crossings"] == [[1, 5, 2, 4, 1], [5, 3, 6, 2, 1], [3, 1, 4, 6, 1]]
    assert out["jones_text"] == "-A^-16 + A^-12 + A^-4"


def test_domain_error(capsys):
    code, out, err = run(capsys, "convert", "--gen", "T((2,3),(4,1);d=0)", "--n", "1")
    assert code == 1 and out == "" and "n r" in err
    code, _, _ = run(capsys, "convert", "--tn", "T^{1}((2,3),(2;0))")
    assert code == 1


def test_resource_error(capsys, tmp_path):
    big = tmp_path / "big.braid"
    big.write_text("strands: 2\n" + " ".join(["1"] * 30) + "\n")
    code, _, err = run(capsys, "verify", "--braid-a", str(big), "--braid-b", str(big))
    assert code == 2 and "limit" in err
    code, _, _ = run(capsys, "verify", "--braid-a", str(big), "--braid-b", str(big), "--max-crossings", "none")
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["nonsense"],
        [],
        ["bound", "--gen", "T((2,3"],
        ["bound"],
        ["verify", "--braid-a", "/nonexistent", "--braid-b", "/nonexistent"],
        ["build", "--vector", "<2^3>", "--tlink", "T((2,3))"],
        ["bunch"],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 3


def test_output_is_byte_identical():
    cmd = [sys.executable, "-m", "tlinks.cli", "bunch", "--words", "x^10 y^2 x^5 y^2 x^7 y^6 x^2 y^2 x^5 y^3"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert first.decode().startswith('{"components": 1')
