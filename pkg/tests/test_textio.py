import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfperm import qsym_algebra as qs
from hopfperm import ssym_algebra as ss
from hopfperm.config import InvalidInput
from hopfperm.linear import PermExpansion, QSymExpansion
from hopfperm.perm_core import Composition, Permutation, Subset
from hopfperm.textio import (
    dumps,
    format_composition,
    format_expansion,
    format_subset,
    loads,
    parse_composition,
    parse_expansion,
    parse_index,
    parse_subset,
)

perm_keys = st.integers(0, 5).flatmap(lambda n: st.permutations(range(1, n + 1)).map(Permutation))
comp_keys = st.lists(st.integers(1, 3), max_size=4).map(Composition)
coeffs = st.integers(-50, 50)


def perm_exps():
    return st.builds(
        lambda b, d, dual: PermExpansion(b, d, dual=dual),
        st.sampled_from("FM"),
        st.dictionaries(perm_keys, coeffs, max_size=6),
        st.booleans(),
    )


def qsym_exps():
    return st.builds(
        lambda b, d, dual: QSymExpansion(b, d, dual=dual),
        st.sampled_from("FM"),
        st.dictionaries(comp_keys, coeffs, max_size=6),
        st.booleans(),
    )


@given(st.one_of(perm_exps(), qsym_exps()))
def test_json_round_trip(x):
    assert loads(dumps(x)) == x


@given(st.one_of(perm_exps(), qsym_exps()).filter(bool))
def test_text_round_trip(x):
    assert parse_expansion(format_expansion(x)) == x


def test_zero_is_json_only():
    zero = PermExpansion("M")
    assert format_expansion(zero) == "0"
    assert loads(dumps(zero)) == zero
    with pytest.raises(InvalidInput):
        parse_expansion("0")


@given(st.one_of(perm_exps(), qsym_exps()))
def test_serialization_is_deterministic(x):
    y = type(x)(x.basis, dict(reversed(list(x.items()))), dual=x.dual)
    assert dumps(x) == dumps(y) and format_expansion(x) == format_expansion(y)


def test_tensor_json_round_trip():
    for t in (ss.coproduct(ss.M("3412")), qs.coproduct(qs.QF((2, 1)))):
        assert loads(dumps(t)) == t


def test_json_schema():
    data = json.loads(dumps(ss.M("4123")))
    assert data["basis"] == "M" and data["dual"] is False
    assert data["terms"] == [{"index": [4, 1, 2, 3], "coeff": 1}]
    q = json.loads(dumps(qs.QM((2, 1, 1))))
    assert q["terms"] == [{"index": [2, 3], "ambient": 4, "coeff": 1}]


def test_text_forms():
    assert format_expansion(ss.m_to_f(ss.M("4123"))) == "F[4123] - F[4132] - F[4213] + F[4321]"
    assert format_expansion(ss.unit("F")) == "F[]"
    assert format_subset(Subset((2, 3), 4)) == "{2,3}"
    assert parse_subset("{2,3}", 4) == Subset((2, 3), 4)
    assert format_composition(Composition((2, 1, 1))) == "(2,1,1)"
    assert parse_composition("(2,1,1)") == Composition((2, 1, 1))
    assert parse_index("{2}@4", "qsym") == Composition((2, 2))
    assert parse_index("10,9,8,7,6,5,4,3,2,1", "ssym")[0] == 10


@pytest.mark.parametrize("bad", ["F[1224]", "G[12]", "F[12] +", "2*"])
def test_parse_errors(bad):
    with pytest.raises(InvalidInput):
        parse_expansion(bad)


def test_loads_errors():
    with pytest.raises(InvalidInput):
        loads("{not json")
    with pytest.raises(InvalidInput):
        loads('{"terms": []}')
