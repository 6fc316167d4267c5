import json
import subprocess
import sys

import pytest

from hopfperm.cli import main
from hopfperm.textio import loads


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "--algebra", "ssym", "--from", "M", "--to", "F", "4123")
    assert code == 0
    assert out == "F[4123] - F[4132] - F[4213] + F[4321]"


def test_expand_expression(capsys):
    code, out, _ = run(capsys, "expand", "--to", "F", "--expr", "M[4123]")
    assert (code, out) == (0, "F[4123] - F[4132] - F[4213] + F[4321]")


def test_qsym_product(capsys):
    code, out, _ = run(capsys, "product", "--algebra", "qsym", "--basis", "M", "(2)", "(1,1)")
    assert code == 0
    assert out == "M(1,3) + M(1,1,2) + M(1,2,1) + M(2,1,1) + M(3,1)"


def test_ssym_product_json_round_trips(capsys):
    code, out, _ = run(capsys, "product", "--basis", "M", "12", "21", "--json")
    assert code == 0
    x = loads(out)
    assert x.coefficient((1, 4, 3, 2)) == 3


def test_coproduct(capsys):
    code, out, _ = run(capsys, "coproduct", "42531")
    assert code == 0
    assert out.count("⊗") == 6


def test_antipode_routes(capsys):
    _, closed, _ = run(capsys, "antipode", "231")
    _, tak, _ = run(capsys, "antipode", "--method", "takeuchi", "231")
    assert closed == tak == "F[132] - F[213] - 2*F[231] + F[312]"
    _, twice, _ = run(capsys, "antipode", "--basis", "M", "--power", "2", "231")
    assert twice == "-2*M[132] + 2*M[213] + M[231]"
    _, expr, _ = run(capsys, "antipode", "--expr", "M[12] - 2*M[21]")
    assert expr == "-3*M[12] - 2*M[21]"


def test_mobius(capsys):
    assert run(capsys, "mobius", "4123", "4132")[1] == "-1"
    code, out, _ = run(capsys, "mobius", "4123")
    rows = dict(line.split() for line in out.splitlines())
    assert rows["4321"] == "1" and rows["4213"] == "-1"


def test_tables(capsys):
    code, out, _ = run(capsys, "table", "--name", "theta", "--degree", "2")
    assert code == 0
    assert out.splitlines() == [",12,21", "12,1,1", "21,1,2"]
    code, out, _ = run(capsys, "table", "--name", "d", "--degree", "3", "--format", "json")
    assert json.loads(out)["degree"] == 3


@pytest.mark.parametrize(
    "name,route,terms,expected",
    [
        ("G1", "count", 7, "1 1 3 13 71 461 3447"),
        ("G2", "determinant", 6, "1 2 7 32 177 1142"),
        ("G3", "reciprocal", 5, "1 3 12 58 327"),
    ],
)
def test_series(capsys, name, route, terms, expected):
    code, out, _ = run(capsys, "series", "--name", name, "--route", route, "--terms", str(terms))
    assert (code, out) == (0, expected)


def test_primitives_and_kernel(capsys):
    assert run(capsys, "primitives", "--degree", "3")[1] == "123 132 213"
    assert run(capsys, "kernel", "--degree", "3")[1] == "132 213"
    code, out, _ = run(capsys, "kernel", "--degree", "3", "--json")
    assert json.loads(out) == [[1, 3, 2], [2, 1, 3]]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "crossed", "--max-degree", "4", "--json")
    data = json.loads(out)
    assert code == 0 and data["failed"] == 0 and data["passed"] == 4


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["expand"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "expand", "--to", "F", "4122")
    assert code == 2 and "usage" in err
    code, _, _ = run(capsys, "verify", "--suite", "nope")
    assert code == 2


def test_degree_cap(capsys, monkeypatch):
    assert run(capsys, "primitives", "--degree", "9")[0] == 3
    monkeypatch.setenv("HOPFPERM_MAX_DEGREE", "4")
    assert run(capsys, "expand", "--to", "F", "12345")[0] == 3
    assert run(capsys, "series", "--terms", "7")[0] == 3


def test_output_is_deterministic(capsys):
    a = run(capsys, "product", "--basis", "M", "12", "21")[1]
    b = run(capsys, "product", "--basis", "M", "12", "21")[1]
    assert a == b


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hopfperm", "series", "--terms", "4"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1 1 3 13"
