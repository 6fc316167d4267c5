import itertools

import pytest
from hypothesis import given

from hopfperm.config import AmbientMismatch, DegreeTooLarge, InvalidInput
from hopfperm.perm_core import (
    Composition,
    Permutation,
    Subset,
    compose,
    coset_decompose,
    coset_reps,
    descent_set,
    direct_sum,
    global_descent_set,
    identity,
    inverse,
    inversion_set,
    is_closed,
    length,
    longest,
    permutations,
    projection,
    standardize,
    subsets,
    zeta_of_subset,
    zeta_pq,
)
from strategies import perm_and_subset, perms


def S(members, n):
    return Subset(members, n)


class TestExamples:
    def test_text_forms(self):
        assert str(Permutation("42531")) == "42531"
        assert Permutation("10,1,2,3,4,5,6,7,8,9")[0] == 10
        assert str(Permutation(range(10, 0, -1))).startswith("10,9,")
        assert str(S((2, 3), 4)) == "{2,3}"
        assert str(Composition((2, 1, 1))) == "(2,1,1)"

    def test_rejects_non_permutations(self):
        with pytest.raises(InvalidInput):
            Permutation("1224")

    def test_compose_and_inverse(self):
        assert compose("312", "312") == Permutation("231")
        assert inverse("312") == Permutation("231")
        assert inverse("42531") == Permutation("52413")
        assert inverse(identity(4)) == identity(4)

    def test_descents(self):
        assert descent_set("46512837") == S((2, 3, 6), 8)
        assert descent_set(identity(5)) == Subset.empty(5)
        assert descent_set(longest(4)) == Subset.full(4)
        assert global_descent_set("563241") == S((2, 5), 6)
        assert global_descent_set("4123") == S((1,), 4)

    def test_inversions(self):
        assert inversion_set("231") == {(1, 3), (2, 3)}
        assert length("231") == 2
        assert length(longest(5)) == 10
        assert inversion_set(identity(3)) == frozenset()

    def test_zeta(self):
        assert zeta_of_subset(3, S((1,), 3)) == Permutation("312")
        assert zeta_of_subset(3, S((2,), 3)) == Permutation("231")
        assert zeta_of_subset(4, S((2,), 4)) == zeta_pq(2, 2) == Permutation("3412")
        assert zeta_of_subset(4, Subset.empty(4)) == identity(4)

    def test_zeta_ambient_mismatch(self):
        with pytest.raises(AmbientMismatch):
            zeta_of_subset(4, S((1,), 3))

    def test_coset_reps(self):
        got = {str(z) for z in coset_reps(4, S((2,), 4))}
        assert got == {"1234", "1324", "1423", "2314", "2413", "3412"}
        assert coset_reps(3, Subset.empty(3)) == (identity(3),)
        assert set(coset_reps(3, Subset.full(3))) == set(permutations(3))

    def test_coset_decompose(self):
        z, blocks = coset_decompose("42531", S((2,), 5))
        assert blocks == [Permutation("21"), Permutation("321")]
        assert compose(z, direct_sum(*blocks)) == Permutation("42531")
        assert coset_decompose("3412", S((2,), 4)) == (Permutation("3412"), [identity(2), identity(2)])
        w = Permutation("2413")
        assert coset_decompose(w, Subset.empty(4)) == (identity(4), [w])

    def test_projection(self):
        assert projection("42531", Subset.empty(5)) == Permutation("42531")
        assert projection("42531", Subset.full(5)) == identity(5)
        assert projection("42531", S((2,), 5)) == Permutation("21543")
        assert projection("3412", S((2,), 4)) == identity(4)

    def test_closed(self):
        assert is_closed("3412")
        assert not is_closed("2413")
        assert is_closed(identity(4)) and is_closed(longest(4))

    def test_subset_conversions(self):
        assert Composition((2, 1, 1)).subset() == S((2, 3), 4)
        T = S((1, 3), 4)
        assert T.complement() == S((2,), 4)
        assert T.reversed() == S((1, 3), 4)
        assert Composition((1, 2)).reversed() == Composition((2, 1))

    def test_degree_cap(self, monkeypatch):
        monkeypatch.setenv("HOPFPERM_MAX_DEGREE", "3")
        with pytest.raises(DegreeTooLarge):
            permutations(4)


def _brute_gdes(u):
    n = len(u)
    return {p for p in range(1, n) if set(u[:p]) == set(range(n - p + 1, n + 1))}


@given(perms())
def test_global_descents_are_descents(u):
    assert global_descent_set(u).issubset(descent_set(u))
    assert set(global_descent_set(u).members) == _brute_gdes(u)


@given(perms())
def test_inverse_involution(u):
    assert inverse(inverse(u)) == u
    assert compose(u, inverse(u)) == identity(len(u))


@given(perms(max_n=7))
def test_standardize_idempotent(u):
    shifted = [3 * x + 7 for x in u]
    assert standardize(shifted) == u
    assert standardize(standardize(shifted)) == standardize(shifted)


@given(perm_and_subset())
def test_zeta_descents(us):
    _, T = us
    z = zeta_of_subset(T.n, T)
    assert descent_set(z) == T and global_descent_set(z) == T


@given(perm_and_subset())
def test_higher_global_descents(us):
    # T ⊆ GDes(u) exactly when u = zeta_T . u_T
    u, T = us
    lhs = T.issubset(global_descent_set(u))
    assert lhs == (compose(zeta_of_subset(len(u), T), projection(u, T)) == u)


@given(perms())
def test_inversions_of_inverse(u):
    # applying u to the transposed inversion pairs gives the inversions of u^-1
    moved = {(u[j - 1], u[i - 1]) for i, j in inversion_set(u)}
    assert moved == set(inversion_set(inverse(u)))


def test_closed_iff_zeta():
    for n in range(6):
        zetas = {zeta_of_subset(n, T) for T in subsets(n)}
        assert zetas == {u for u in permutations(n) if is_closed(u)}


def test_coset_counts_are_multinomial():
    from math import factorial, prod

    for n in range(1, 7):
        for T in subsets(n):
            want = factorial(n) // prod(factorial(a) for a in T.composition())
            assert len(coset_reps(n, T)) == want


def _shifted(T, p):
    return {p + t for t in T.members}


def test_over_under_descents():
    for p, q in itertools.product(range(1, 4), repeat=2):
        if p + q > 6:
            continue
        n = p + q
        zpq = zeta_pq(p, q)
        for u in permutations(p):
            for v in permutations(q):
                uv = direct_sum(u, v)
                assert set(descent_set(uv).members) == set(descent_set(u).members) | _shifted(descent_set(v), p)
                assert not global_descent_set(uv).members
                w = compose(zpq, uv)
                want = set(descent_set(u).members) | {p} | _shifted(descent_set(v), p)
                assert set(descent_set(w).members) == want
                gwant = set(global_descent_set(u).members) | {p} | _shifted(global_descent_set(v), p)
                assert set(global_descent_set(w).members) == gwant
                assert len(w) == n


def test_three_block_over_under():
    for sizes in itertools.product(range(1, 3), repeat=3):
        n = sum(sizes)
        cuts = (sizes[0], sizes[0] + sizes[1])
        z = zeta_of_subset(n, Subset(cuts, n))
        for blocks in itertools.product(*(permutations(s) for s in sizes)):
            offsets = (0, sizes[0], sizes[0] + sizes[1])
            des = set()
            gdes = set()
            for b, o in zip(blocks, offsets):
                des |= _shifted(descent_set(b), o)
                gdes |= _shifted(global_descent_set(b), o)
            x = direct_sum(*blocks)
            assert set(descent_set(x).members) == des
            w = compose(z, x)
            assert set(descent_set(w).members) == des | set(cuts)
            assert set(global_descent_set(w).members) == gdes | set(cuts)
