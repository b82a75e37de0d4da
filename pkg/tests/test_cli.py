import json

import pytest

from bzsum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,value", [
    (["mult", "--rank", "2", "1,1;1,1;1,1"], "2"),
    (["mult", "--rank", "1", "1;1;1;1"], "2"),
    (["mult", "--rank", "2", "0,0;0,0;0,0"], "1"),
    (["mult", "1;1;1;1;2"], "3"),
])
def test_mult(capsys, argv, value):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == value


@pytest.mark.parametrize("method", ["polytope", "oracle", "channel", "explicit", "all"])
def test_mult_methods(capsys, method):
    code, out, _ = run(capsys, "mult", "--method", method, "1,1;1,1;1,1;1,1")
    assert code == 0 and out.strip() == "8"


def test_mult_json_explain(capsys):
    code, out, _ = run(capsys, "mult", "--json", "--explain", "1,0;0,1;1,0;0,1")
    data = json.loads(out)
    assert code == 0
    assert data["multiplicity"] == 2 and data["rank"] == 2 and data["method"] == "polytope"
    assert data["weights"] == [[1, 0], [0, 1], [1, 0], [0, 1]]
    assert data["breakdown"] == {"0,0": [1, 1], "1,1": [1, 1]}


def test_mult_explain_text(capsys):
    code, out, _ = run(capsys, "mult", "--explain", "1;1;1;1")
    assert code == 0
    assert out.splitlines()[0] == "2"
    assert len(out.splitlines()) == 3


@pytest.mark.parametrize("argv", [
    ["mult", "1,0;1"],
    ["mult", "x,y;1"],
    ["mult", "--rank", "3", "1,0;0,1;0,0"],
    ["mult", "1,0;0,1"],
    ["cone", "1,0,0;0,0,1;1,0,0;0,0,1"],
    ["enumerate", "1;1;1;1;1;1"],
    ["verify"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_argparse_usage_exit(capsys):
    with pytest.raises(SystemExit) as e:
        main(["mult", "--method", "nope", "1;1;1"])
    assert e.value.code == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--entries", "1,1;1,1;1,1")
    lines = out.splitlines()
    assert code == 0 and lines[-1] == "count: 2"
    assert sum(1 for s in lines if s.startswith("[")) == 2
    code, out, _ = run(capsys, "enumerate", "1,2;2,1;3,3")
    assert out.splitlines()[-1] == "count: 1"
    code, out, _ = run(capsys, "enumerate", "1,0;1,0;0,0")
    assert out.strip() == "count: 0"
    code, out, _ = run(capsys, "enumerate", "--entries", "1;1;1;1")
    assert out.splitlines()[-1] == "count: 2"


def test_cone(capsys):
    code, out, _ = run(capsys, "cone", "1;1;1;1")
    assert code == 0 and out.splitlines()[0] == "member"
    code, out, _ = run(capsys, "cone", "3;0;0;1")
    assert out.splitlines()[0] == "non-member" and "violated: S-lambda_1 >= 0" in out
    code, out, _ = run(capsys, "cone", "1,0;1,0;1,0;1,0")
    assert out.splitlines()[0] == "non-member" and "S = 8/3, 4/3" in out
    code, out, _ = run(capsys, "cone", "1,0;0,1;0,0;0,0")
    assert out.splitlines()[0] == "member"


@pytest.mark.parametrize("argv", [
    ["verify", "--rank", "1", "--max-label", "8", "--points", "4"],
    ["verify", "--rank", "2", "--max-label", "3", "--points", "3"],
    ["verify", "--rank", "2", "--max-label", "1", "--points", "5"],
])
def test_verify(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and "mismatches: 0" in out


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", "--kmax", "2")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("family,k,size")
    sizes = [int(s.split(",")[2]) for s in lines[1:]]
    assert sizes == sorted(sizes) and len(sizes) == 2


def test_bench_family_and_json(capsys):
    code, out, _ = run(capsys, "bench", "--family", "su3-diagonal", "--json")
    data = json.loads(out)
    assert code == 0 and [row["k"] for row in data["rows"]] == [1, 2, 3, 4, 5, 6]
    for row in data["rows"]:
        assert row["multiplicity"] == row["oracle"] == row["box"]
    code, out, _ = run(capsys, "bench", "--family", "su3-diagonal")
    assert len(out.strip().splitlines()) == 7
