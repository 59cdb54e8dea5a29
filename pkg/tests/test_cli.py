import json
from pathlib import Path

import pytest

from langclass.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert out.endswith("\n") and out.count("\n") == 1
    return code, json.loads(out)


IDENTITY4 = [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["tempered", "[2;triv;0]"], {"tempered": True}),
        (["z", "[1;triv;1] + [2;triv;0]"], {"exponents": ["1", "0", "0"]}),
        (["zstar", "[2;triv;0]"], {"exponents": ["1/2", "-1/2"]}),
        (["relevant", "--d", "2", "[1;triv;0] + [1;triv;0]"], {"relevant": False}),
        (["equiv", "[1;a;1] + [1;a;0]", "[1;a;0] + [1;a;1]"], {"equivalent": True}),
        (["centralizer", "[1;a;0] + [1;a;0] + [2;b;1]"], {"component_group_order": 1, "gl_factors": [2, 1]}),
        (["check71", "[1;a;0] + [1;a;0] + [2;b;1]"], {"holds": True}),
        (["weyl", "order", "--n", "5"], {"order": 120}),
        (["datum", "validate", "--datum", str(GOLDEN / "b2.json")], {"rank": 2, "semisimple_rank": 2, "valid": True}),
        (["chamber", "regular", "--n", "4", "--levi", "1,3", "--nu", '["2","2","1","1"]'], {"gram": IDENTITY4, "regular": True}),
        (["chamber", "maxlevi", "--n", "4", "--levi", "", "--nu", '["3","3","1","1"]'], {"gram": IDENTITY4, "levi": [1, 3]}),
        (["roundtrip", "--fuzz", "40", "--seed", "5"], {"cases": 40, "failures": [], "ok": True, "seed": 5}),
    ],
)
def test_verbs(capsys, argv, expected):
    code, doc = run_json(capsys, *argv)
    assert code == 0
    assert doc == expected


def test_twist_and_assemble(capsys):
    code, doc = run_json(capsys, "twist", "--beta", "1/2", "[1;triv;1] + [1;triv;0]")
    assert code == 0 and doc["expr"] == "[1;triv;3/2] + [1;triv;1/2]"
    _, triple = run_json(capsys, "classify", "--mode", "sub", doc["expr"])
    code, back = run_json(capsys, "assemble", "--mode", "sub", json.dumps(triple))
    assert code == 0 and back["expr"] == doc["expr"]


def test_json_input(capsys, tmp_path):
    path = tmp_path / "phi.json"
    path.write_text(json.dumps({"n": 2, "d": 1, "segments": [[2, "triv", 1, "0"]]}))
    assert run_json(capsys, "tempered", "--json", str(path)) == (0, {"tempered": True})


def test_weyl_elements_and_dual(capsys):
    code, doc = run_json(capsys, "weyl", "elements", "--datum", str(GOLDEN / "b2.json"))
    assert code == 0 and doc["order"] == 8 and doc["elements"][1]["word"] == [1]
    code, doc = run_json(capsys, "datum", "dual", "--datum", str(GOLDEN / "b2.json"))
    assert doc["simple_roots"] == [[1, -1], [0, 2]]


@pytest.mark.parametrize(
    "argv, code_name",
    [
        (["classify", "--n", "4", "[1;triv;0]"], "DimensionMismatch"),
        (["classify", "[1;triv;99999999999999999999]"], "OverflowError"),
        (["assemble", "{not json"], "InputFormatError"),
        (["twist", "--beta", "1/0", "[1;triv;0]"], "InputFormatError"),
        (["chamber", "regular", "--n", "4", "--levi", "1", "--nu", '["1","0","0","0"]'], "NuOutsideSpace"),
        (["weyl", "relative", "--n", "3", "--levi", "7"], "IndexOutOfRange"),
    ],
)
def test_domain_errors_exit_one(capsys, argv, code_name):
    code, doc = run_json(capsys, *argv)
    assert code == 1
    assert doc["code"] == code_name
    assert set(doc) <= {"code", "message", "position", "expected"}


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["nonsense"],
        ["classify"],
        ["weyl", "order"],
        ["weyl", "relative", "--n", "3"],
        ["chamber", "dominant", "--n", "3"],
        ["classify", "--mode", "left", "[1;a;0]"],
        ["weyl", "order", "--datum", "/nonexistent.json"],
        ["datum", "validate", "--n", "2", "--levi", "x"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert "usage" in err


def test_output_is_byte_stable(capsys):
    first = run(capsys, "weyl", "relative", "--n", "4", "--levi", "1,3")
    second = run(capsys, "weyl", "relative", "--n", "4", "--levi", "1,3")
    assert first == second
