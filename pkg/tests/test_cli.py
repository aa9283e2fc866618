import json
import subprocess
import sys

import pytest

from matorder.cli import main
from matorder.exactlin import ExactMatrix
from matorder.fileio import parse_matrix


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path, capsys):
    def classic_file(name, n):
        p = tmp_path / f"{name}{n}.txt"
        code, out, _ = run(capsys, "classic", name, "-n", n)
        assert code == 0
        p.write_text(out)
        return p

    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return p

    return classic_file, write


def test_validate(capsys, files):
    classic_file, write = files
    assert run(capsys, "validate", classic_file("lex", 3))[0] == 0
    code, out, _ = run(capsys, "validate", write("z.txt", "3 3\n1 0 0\n0 0 1\n1 0 0\n"))
    assert code == 3 and "RankDeficient" in out
    code, out, _ = run(capsys, "validate", write("s.txt", "2 2\n1 -1\n0 1\n"), "--json")
    doc = json.loads(out)
    assert code == 3 and doc["condition"] == "BadColumnSign" and not doc["valid"]
    code, _, err = run(capsys, "validate", write("short.txt", "3 3\n1 0 0\n0 1 0\n"))
    assert code == 2 and "line 3" in err
    assert run(capsys, "validate", "/nonexistent/file")[0] == 2


def test_compare(capsys, files):
    classic_file, _ = files
    lex, rev = classic_file("lex", 3), classic_file("revlex", 3)
    assert run(capsys, "compare", lex, "2,2,2", "2,3,0") == (0, "LT\n", "")
    assert run(capsys, "compare", lex, "1,1,1", "1,1,1")[1] == "EQ\n"
    assert run(capsys, "compare", rev, "2,2,2", "3,0,3")[1] == "GT\n"
    assert run(capsys, "compare", lex, "2,2", "2,3,0")[0] == 2
    assert run(capsys, "compare", lex, "2,x,2", "2,3,0")[0] == 2
    doc = json.loads(run(capsys, "compare", lex, "0,0,1", "1,0,0", "--json")[1])
    assert doc["result"] == "LT"


def test_compare_invalid_matrix(capsys, files):
    _, write = files
    assert run(capsys, "compare", write("bad.txt", "2 2\n1 1\n1 1\n"), "1,0", "0,1")[0] == 3


def test_classic_and_family_files(capsys):
    code, out, _ = run(capsys, "classic", "revlex", "-n", 3)
    assert parse_matrix(out) == ExactMatrix.from_rows([[1, 1, 1], [0, 0, -1], [0, -1, 0]])
    code, out, _ = run(capsys, "family", "C", "-n", 4)
    assert code == 0
    assert out.splitlines()[1:] == ["4 4", "1 1 1 1", "1 1 0 0", "11 3 2 1", "0 0 0 1"]
    doc = json.loads(run(capsys, "family", "D", "-n", 4, "--json")[1])
    assert doc["matrix"][2] == ["6", "2", "3", "1"]
    assert run(capsys, "family", "C", "-n", 3)[0] == 2


def test_sort(capsys, files):
    classic_file, _ = files
    code, out, _ = run(capsys, "sort", classic_file("deglex", 2), "-d", 2)
    assert out.split() == ["0,0", "0,1", "1,0", "0,2", "1,1", "2,0"]
    code, out, _ = run(capsys, "sort", classic_file("revlex", 3), "-d", 2, "--exact")
    assert out.split() == ["0,0,2", "0,1,1", "1,0,1", "0,2,0", "1,1,0", "2,0,0"]


def test_induce(capsys, tmp_path):
    p = tmp_path / "c4.txt"
    p.write_text(run(capsys, "family", "C", "-n", 4)[1])
    code, out, _ = run(capsys, "induce", p, "-i", 4)
    assert code == 0 and "# deleted row 4" in out
    assert parse_matrix(out) == ExactMatrix.from_rows([[1, 1, 1], [1, 1, 0], [11, 3, 2]])
    assert run(capsys, "induce", p, "-i", 5)[0] == 2


def test_equiv(capsys, files, tmp_path):
    classic_file, write = files
    g2, r2 = classic_file("deglex", 2), classic_file("revlex", 2)
    assert run(capsys, "equiv", g2, r2) == (0, "EQUIVALENT\n", "")
    doc = json.loads(run(capsys, "equiv", g2, r2, "--json")[1])
    assert doc["verdict"] == "EQUIVALENT" and doc["certificate"] == [["1", "0"], ["-1", "1"]]
    code, out, _ = run(capsys, "equiv", classic_file("deglex", 3), classic_file("revlex", 3), "-d", 6)
    assert code == 1 and out.startswith("DISTINCT")
    tall = write("tall.txt", "3 2\n1 0\n0 0\n0 1\n")
    code, out, _ = run(capsys, "equiv", classic_file("lex", 2), tall, "-d", 3)
    assert code == 4 and out.startswith("UNDETERMINED")
    assert run(capsys, "equiv", g2, classic_file("lex", 3))[0] == 2


def test_verify_main(capsys):
    code, out, _ = run(capsys, "verify-main", "-n", 4)
    assert code == 0 and "CERTIFIED" in out
    code, out, _ = run(capsys, "verify-main", "-n", 4, "--json")
    doc = json.loads(out)
    assert doc["certified"] and doc["det_c"] == "-8" and doc["det_d_match"] is False
    assert doc["witness"]["pair"] == [[0, 1, 3, 0], [1, 0, 0, 3]]
    assert all(x["verdict"] == "EQUIVALENT" for x in doc["induced"])
    assert run(capsys, "verify-main", "-n", 6)[0] == 1
    assert run(capsys, "verify-main", "-n", 6, "--witness-bound", 7)[0] == 0


def test_det_report(capsys):
    code, out, _ = run(capsys, "det-report", "--from", 4, "--to", 5)
    assert code == 0 and "det(D_n)" in out
    doc = json.loads(run(capsys, "det-report", "--from", 4, "--to", 4, "--json")[1])
    assert doc["all_nonzero"] and len(doc["entries"]) == 10
    assert run(capsys, "det-report", "--from", 3, "--to", 5)[0] == 2


def test_lexprop(capsys):
    code, out, _ = run(capsys, "lexprop", "-n", 4, "-d", 3)
    assert code == 0 and out.strip().endswith("PASS")


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["classic", "lex"])
    assert exc.value.code == 2


def test_deterministic_json(capsys):
    a = run(capsys, "verify-main", "-n", 5, "--json")[1]
    b = run(capsys, "verify-main", "-n", 5, "--json")[1]
    assert a == b and json.loads(a)["n"] == 5


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "matorder", "classic", "lex", "-n", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "2 2\n1 0\n0 1\n" in res.stdout
