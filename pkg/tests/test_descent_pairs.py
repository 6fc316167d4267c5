import csv
import io
import json

import pytest

from hopfperm.config import AmbientMismatch, InvalidInput
from hopfperm.perm_core import Subset, coset_reps, subsets
from hopfperm.structure_lab import descent_pairs as dp


def test_examples():
    assert dp.d_number(Subset((1,), 3), Subset((1,), 3)) == 1
    for n in range(1, 6):
        for T in subsets(n):
            assert dp.b_number(Subset.empty(n), T) == 1
        for S in subsets(n):
            assert dp.c_number(S, Subset.empty(n)) == len(coset_reps(n, S))


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        dp.d_number(Subset((1,), 3), Subset((1,), 4))


@pytest.mark.parametrize("kind,oracle", [("d", dp.d_number), ("b", dp.b_number), ("c", dp.c_number)])
def test_tables_match_direct_counts(kind, oracle):
    for n in range(1, 5):
        table = dp.pair_table(n, kind)
        for S in table.labels:
            for T in table.labels:
                assert table[(S, T)] == oracle(S, T)


def test_d_table_sums_to_factorial():
    from math import factorial

    for n in range(7):
        assert int(dp.descent_pair_counts(n, "d").sum()) == factorial(n)


def test_symmetric_tables():
    for n in range(1, 7):
        assert dp.pair_table(n, "d").is_symmetric()
        assert dp.pair_table(n, "b").is_symmetric()


def test_gessel_identities():
    assert dp.verify_gessel_identities(3)
    for n in range(1, 7):
        report = dp.gessel_report(n)
        assert all(report.values()), report


def test_unknown_kind():
    with pytest.raises(InvalidInput):
        dp.descent_pair_counts(3, "x")


def test_exports():
    t = dp.pair_table(3, "d")
    rows = list(csv.reader(io.StringIO(t.to_csv())))
    assert rows[0][1:] == ["{}", "{1}", "{2}", "{1,2}"]
    assert len(rows) == 5
    assert [int(x) for x in rows[1][1:]] == [1, 0, 0, 0]
    data = json.loads(t.to_json())
    assert data["name"] == "d" and data["degree"] == 3
    assert sum(map(sum, data["values"])) == 6
