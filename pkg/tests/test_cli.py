import json

import pytest

from thetabarrier.cli import main
from thetabarrier.reports import reanalyze

K13 = "c a\nc b\nc d\n"
P5 = "0 1\n1 2\n2 3\n3 4\n"


def run(capsys, monkeypatch, argv, stdin=""):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_star(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["analyze", "--theta", "0"], K13)
    doc = json.loads(out)
    assert code == 0
    assert doc["mult"] == 2
    center = doc["graph"]["labels"].index("c")
    assert doc["decomposition"]["A"] == [center]
    assert doc["deficiency"] == {"value": 2, "witness": [center]}
    assert doc["barriers"]["intersection_of_maximal"] == [center]
    assert doc["barriers"]["equals_A_theta"] and doc["barriers"]["N_theta_empty"]


def test_analyze_p5_sqrt3(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["analyze", "--theta-poly", "1 0 -3"], P5)
    doc = json.loads(out)
    assert code == 0 and doc["mult"] == 1 and doc["critical"]
    assert doc["decomposition"]["D"] == [0, 1, 2, 3, 4]
    assert doc["theta"] == {"minpoly": "1 0 -3", "label": "sqrt3"}


def test_analyze_non_root(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["analyze", "--theta", "5", "--no-barriers"], "0 1\n")
    doc = json.loads(out)
    assert doc["mult"] == 0 and doc["decomposition"]["D"] == doc["decomposition"]["A"] == []
    assert doc["barriers"] is None


def test_document_reingests_to_itself(capsys, monkeypatch):
    for fmt, text in (("edgelist", K13), ("graph6", "Dhc\n")):
        _, out, _ = run(capsys, monkeypatch, ["analyze", "-f", fmt, "--theta", "0"], text)
        doc = json.loads(out)
        assert reanalyze(doc) == doc


def test_barriers_command_forces_enumeration(capsys, monkeypatch):
    _, out, _ = run(capsys, monkeypatch, ["barriers", "--theta", "1", "--no-barriers"], "0 1\n1 2\n")
    doc = json.loads(out)
    assert doc["barriers"]["maximal"] == [[0], [2]]


def test_text_output(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["analyze", "-o", "text"], P5)
    assert code == 0 and "x^5 - 4x^3 + 3x" in out


def test_roots(capsys, monkeypatch):
    _, out, _ = run(capsys, monkeypatch, ["roots", "-o", "text"], P5)
    assert out.splitlines()[1:] == ["x: 1", "x - 1: 1", "x + 1: 1", "x^2 - 3: 1"]
    _, out, _ = run(capsys, monkeypatch, ["roots", "-o", "text"], "0 1\n")
    assert out.splitlines()[1:] == ["x - 1: 1", "x + 1: 1"]
    _, out, _ = run(capsys, monkeypatch, ["roots"], "vertices: 3\n")
    assert json.loads(out)["roots"] == [{"minpoly": "1 0", "factor": "x", "label": "0", "multiplicity": 3}]


def test_parse_and_theta_errors_exit_2(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch, ["analyze"], "0 1 2\n")
    assert code == 2 and out == "" and "line 1" in err
    code, out, _ = run(capsys, monkeypatch, ["analyze", "--theta-poly", "1 0 -4"], "0 1\n")
    assert code == 2 and out == ""
    code, out, _ = run(capsys, monkeypatch, ["analyze", "--theta", "abc"], "0 1\n")
    assert code == 2 and out == ""
    code, _, _ = run(capsys, monkeypatch, ["analyze", "-f", "graph6"], "A~\n")
    assert code == 2


def test_size_cap_exit_3(capsys, monkeypatch):
    path23 = "".join(f"{i} {i + 1}\n" for i in range(22))
    code, out, _ = run(capsys, monkeypatch, ["analyze"], path23)
    assert code == 3 and out == ""
    path30 = "".join(f"{i} {i + 1}\n" for i in range(29))
    code, out, _ = run(capsys, monkeypatch, ["analyze", "--no-barriers"], path30)
    assert code == 3 and out == ""


def test_verify_command(capsys, monkeypatch, tmp_path):
    out_file = tmp_path / "r.json"
    code, _, _ = run(capsys, monkeypatch, ["verify", "--nmax", "4", "--theta-policy", "deg2", "--out", str(out_file)])
    assert code == 0 and json.loads(out_file.read_text())["passed"]
    thetas = tmp_path / "t.txt"
    thetas.write_text("# roots\n1 0 -3\n1 -2\n")
    code, _, _ = run(capsys, monkeypatch, ["verify", "--nmax", "4", "--theta-policy", "file", "--theta-file", str(thetas)])
    assert code == 0
    code, _, _ = run(capsys, monkeypatch, ["verify", "--random", "5", "--random-n", "6"])
    assert code == 0
    code, _, _ = run(capsys, monkeypatch, ["verify", "--groups", "bogus"])
    assert code == 2


def test_hunt_command(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["hunt", "--target", "extreme_not_barrier", "--nmax", "7"])
    assert code == 0 and json.loads(out)["found"]
    code, _, _ = run(capsys, monkeypatch, ["hunt", "--target", "special_intersection_gap", "--nmax", "3"])
    assert code == 1
    with pytest.raises(SystemExit) as e:
        main(["hunt", "--target", "nope"])
    assert e.value.code == 2
