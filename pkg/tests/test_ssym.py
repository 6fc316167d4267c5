import dataclasses
import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfperm import ssym_algebra as ss
from hopfperm.axioms import axiom_failures, ssym_ops
from hopfperm.linear import PermExpansion
from hopfperm.perm_core import (
    Permutation,
    compose,
    direct_sum,
    global_descent_set,
    identity,
    inverse,
    longest,
    permutations,
    shuffles,
    subsets,
    zeta_pq,
)
from hopfperm.textio import parse_expansion
from hopfperm.weak_order import leq

P = Permutation
E = P(())


def expansions(basis, max_n=4):
    keys = st.integers(0, max_n).flatmap(lambda n: st.permutations(range(1, n + 1)).map(Permutation))
    return st.dictionaries(keys, st.integers(-5, 5), max_size=6).map(lambda d: PermExpansion(basis, d))


class TestProductsAndCoproducts:
    def test_small_products(self):
        assert ss.product(ss.F("1"), ss.F("1")) == parse_expansion("F[12] + F[21]")
        assert ss.product(ss.F("231"), ss.unit("F")) == ss.F("231")
        assert ss.product(ss.M("231"), ss.unit("M")) == ss.M("231")

    def test_f_product_term_count(self):
        for p, q in [(1, 2), (2, 2), (3, 2)]:
            got = ss.f_product(longest(p), identity(q))
            assert len(got) == len(shuffles(p, q))

    def test_f_coproduct(self):
        assert ss.f_coproduct("21").as_dict() == {(E, P("21")): 1, (P("1"), P("1")): 1, (P("21"), E): 1}
        assert ss.coproduct(ss.unit("F")).as_dict() == {(E, E): 1}

    def test_m_coproduct(self):
        assert ss.m_coproduct("4123").as_dict() == {
            (E, P("4123")): 1,
            (P("1"), P("123")): 1,
            (P("4123"), E): 1,
        }
        assert ss.m_coproduct("3412").as_dict() == {
            (E, P("3412")): 1,
            (P("12"), P("12")): 1,
            (P("3412"), E): 1,
        }
        assert ss.m_coproduct("2413").as_dict() == {(E, P("2413")): 1, (P("2413"), E): 1}

    def test_m_coproduct_through_f(self):
        for n in range(6):
            for u in permutations(n):
                via_f = Counter()
                for (a, b), c in ss.coproduct(ss.m_to_f(ss.M(u))).items():
                    for x, cx in ss.f_to_m(ss.F(a)).items():
                        for y, cy in ss.f_to_m(ss.F(b)).items():
                            via_f[(x, y)] += c * cx * cy
                assert ss.m_coproduct(u).as_dict() == {k: v for k, v in via_f.items() if v}

    def test_loday_description(self):
        for n in range(6):
            for u in permutations(n):
                pairs = {}
                for p in range(n + 1):
                    z = zeta_pq(p, n - p)
                    for v in permutations(p):
                        for w in permutations(n - p):
                            vw = direct_sum(v, w)
                            if leq(vw, u) and leq(u, compose(z, vw)):
                                pairs[(v, w)] = 1
                assert ss.f_coproduct(u).as_dict() == pairs


class TestMonomialProduct:
    def test_alpha_examples(self):
        assert ss.alpha("12", "21", "2431") == 2
        assert ss.alpha("1", "1", zeta_pq(1, 1)) == 2
        assert ss.alpha("12", "12", zeta_pq(2, 2)) == 2
        for u, v in [("21", "1"), ("132", "21")]:
            assert ss.alpha(u, v, direct_sum(P(u), P(v))) >= 1

    def test_nonnegative(self):
        for p in range(1, 5):
            for q in range(1, 7 - p):
                if p + q > 5:
                    continue
                for u in permutations(p):
                    for v in permutations(q):
                        assert all(c > 0 for _, c in ss.m_product(u, v).items())

    def test_b_sets_decompose(self):
        # beta^w_{u,v} = #{zeta : (u x v) zeta^-1 <= w} sums alpha over the upper cone
        for p in range(1, 4):
            for q in range(1, 6 - p):
                alphas = {
                    (u, v): dict(ss.m_product(u, v).items())
                    for u in permutations(p)
                    for v in permutations(q)
                }
                shuf = shuffles(p, q)
                for (u, v) in alphas:
                    uv = direct_sum(u, v)
                    tops = [compose(uv, inverse(z)) for z in shuf]
                    for w in permutations(p + q):
                        beta = sum(1 for t in tops if leq(t, w))
                        total = sum(
                            a.get(w, 0)
                            for (u2, v2), a in alphas.items()
                            if leq(u, u2) and leq(v, v2)
                        )
                        assert beta == total

    def test_higher_products(self):
        ones = [identity(1)] * 3
        assert ss.higher_product(ones, "F") == PermExpansion("F", {u: 1 for u in permutations(3)})
        assert ss.higher_product([P("231")], "F") == ss.F("231")
        assert ss.higher_product(ones, "M") == ss.f_to_m(ss.higher_product(ones, "F"))
        blocks = [P("21"), P("1"), P("12")]
        folded = ss.product(ss.product(ss.M(blocks[0]), ss.M(blocks[1])), ss.M(blocks[2]))
        assert ss.higher_product(blocks, "M") == folded


class TestIteratedCoproduct:
    def test_counts(self):
        assert len(ss.higher_coproduct(ss.F("21"), 2)) == 6
        assert ss.higher_coproduct(ss.unit("F"), 3).as_dict() == {(E, E, E, E): 1}
        t = ss.higher_coproduct(ss.M("3412"), 2)
        assert len(t) == 6
        assert t.coefficient((P("12"), E, P("12"))) == 1

    def test_agrees_with_iteration(self):
        for basis, ctor in (("F", ss.F), ("M", ss.M)):
            for u in permutations(4):
                two = ss.higher_coproduct(ctor(u), 2).as_dict()
                it = Counter()
                for (a, b), c in ss.coproduct(ctor(u)).items():
                    for (b1, b2), d in ss.coproduct(PermExpansion(basis, {b: 1})).items():
                        it[(a, b1, b2)] += c * d
                assert two == {k: v for k, v in it.items() if v}


class TestConvolutionPowers:
    def test_annihilates_low_degrees(self):
        for k in range(1, 4):
            for n in range(k):
                for u in permutations(n):
                    assert not ss.pi_power(ss.F(u), k)

    def test_first_power_is_projection(self):
        assert ss.pi_power(ss.F("2413"), 1) == ss.F("2413")
        assert not ss.pi_power(ss.unit("F"), 1)

    def test_closed_forms(self):
        assert ss.pi_power(ss.F("21"), 2) == ss.pi_power_closed("21", 2, "F")
        for n in range(1, 5):
            for u in permutations(n):
                for k in range(n + 2):
                    assert ss.pi_power(ss.F(u), k) == ss.pi_power_closed(u, k, "F")
                    assert ss.pi_power(ss.M(u), k) == ss.pi_power_closed(u, k, "M")


class TestAntipode:
    def test_degree_one(self):
        assert ss.antipode(ss.F("1")) == -ss.F("1")
        assert ss.antipode(ss.unit("F")) == ss.unit("F")
        assert ss.takeuchi_antipode(ss.unit("M")) == ss.unit("M")

    def test_takeuchi_on_21(self):
        assert ss.takeuchi_antipode(ss.F("21")) == ss.antipode_f("21")

    def test_monomial_sign_is_uniform(self):
        for n in range(1, 6):
            for v in permutations(n):
                sign = (-1) ** (len(global_descent_set(v)) + 1)
                got = ss.antipode_m(v)
                assert all(c * sign > 0 for _, c in got.items())
                assert all(ss.kappa(v, w) == c * sign for w, c in got.items())

    def test_c_sets_partition_a_sets(self):
        for n in range(1, 6):
            for v in permutations(n):
                G = global_descent_set(v)
                for T in subsets(n):
                    if not T.issubset(G):
                        continue
                    for w in permutations(n):
                        parts = [z for S in subsets(n) if S.issubset(T) for z in ss.c_set(v, w, S)]
                        assert len(parts) == len(set(parts))
                        assert set(parts) == set(ss.a_set(v, w, T))
                        assert ss.gamma_s(v, w, T) == len(ss.c_set(v, w, T))

    def test_antipode_power(self):
        x = ss.M("231")
        assert ss.antipode_power(x, 2) == x + 2 * (ss.M("213") - ss.M("132"))
        assert ss.antipode_power(x, 0) == x


class TestWordRealization:
    def test_examples(self):
        assert ss.expand_word_series("1", 2) == {(1,): 1, (2,): 1}
        assert ss.expand_word_series("21", 2) == {(2, 1): 1}

    def test_words_follow_the_inverse(self):
        # the word of F_u lists x_{i_{u^-1(1)}} ... with weakly increasing i
        for u in permutations(3):
            for word in ss.expand_word_series(u, 3):
                ui = inverse(u)
                idx = [0] * 3
                for pos, var in enumerate(word, start=1):
                    idx[ui[pos - 1] - 1] = var
                assert idx == sorted(idx)


@given(expansions("M"))
def test_basis_round_trip(x):
    assert ss.f_to_m(ss.m_to_f(x)) == x


@given(expansions("F"), expansions("F"))
@settings(max_examples=30, deadline=None)
def test_product_is_bilinear(x, y):
    lhs = ss.product(x + y, y)
    assert lhs == ss.product(x, y) + ss.product(y, y)


def test_m_to_f_examples():
    assert ss.m_to_f(ss.M("4123")) == parse_expansion("F[4123] - F[4132] - F[4213] + F[4321]")
    assert ss.m_to_f(ss.M(longest(4))) == ss.F(longest(4))


def test_hopf_axioms_degree_four_both_bases():
    for basis in ("F", "M"):
        assert not any(axiom_failures(ssym_ops(basis), 4).values())


def test_axiom_checker_catches_a_wrong_antipode():
    ops = ssym_ops("F")
    broken = dataclasses.replace(ops, antipode=lambda x: -x)
    fails = axiom_failures(broken, 3)
    assert fails["antipode"] > 0
    assert fails["associativity"] == 0


@pytest.mark.parametrize("n", range(5))
def test_products_are_associative_on_triples(n):
    for u, v, w in itertools.product(permutations(1), permutations(n), permutations(1)):
        for ctor in (ss.F, ss.M):
            a, b, c = ctor(u), ctor(v), ctor(w)
            assert ss.product(ss.product(a, b), c) == ss.product(a, ss.product(b, c))
