import pytest

from hopfperm import ssym_algebra as ss
from hopfperm.config import InvalidInput
from hopfperm.perm_core import Permutation, Subset, identity, permutations, zeta_pq
from hopfperm.structure_lab import crossed

P = Permutation


def test_kernel_examples():
    assert set(crossed.hopf_kernel_basis(3)) == {P("132"), P("213")}
    excluded = {u for u in permutations(3) if crossed.is_kernel_excluded(u)}
    assert excluded == {P("123"), P("312"), P("231"), P("321")}


def test_kernel_dimensions():
    for n in range(1, 8):
        assert len(crossed.hopf_kernel_basis(n)) == crossed.kernel_dimension(n)


def test_kernel_membership_is_exact():
    for n in range(1, 6):
        for u in permutations(n):
            assert crossed.kernel_membership(u) == (not crossed.is_kernel_excluded(u))


def test_structure_constants():
    for p in range(1, 6):
        for q in range(1, 7 - p):
            assert crossed.verify_structure_constants(p, q)
    assert crossed.structure_constant_exceptions(2, 2) == {identity(4): 1, zeta_pq(2, 2): 2}


def test_antipode_of_zeta():
    for p in range(1, 5):
        for q in range(1, 6 - p):
            assert crossed.antipode_of_zeta_pq(p, q)


def test_sigma_routes():
    for p in range(1, 5):
        for q in range(1, 6 - p):
            s = crossed.sigma_on_primitives(p, q)
            assert s == crossed.sigma_alpha_formula(p, q)
            assert s == crossed.sigma_cocycle(Subset((), p), Subset((), q))


def test_sigma_transposed_order_differs_off_diagonal():
    for p in range(1, 5):
        for q in range(1, 6 - p):
            same = crossed.sigma_on_primitives(p, q) == crossed.sigma_alpha_formula(p, q, transpose=True)
            assert same == (p == q)


def test_lie_cocycle():
    for p in range(1, 4):
        assert not crossed.lie_cocycle(p, p)
        for q in range(1, 5 - p):
            assert crossed.lie_cocycle(p, q) == crossed.lie_cocycle_alpha(p, q)
            assert crossed.lie_cocycle(p, q) == -crossed.lie_cocycle(q, p)


def test_sigma_on_unit_is_trivial():
    # sigma(1, k) = epsilon(k) 1
    for T in ((1,), (2,), (1, 1)):
        assert crossed.sigma_cocycle((), T) == ss.unit("M").zero()
    assert crossed.sigma_cocycle((), ()) == ss.unit("M")


def test_rejects_empty_primitive():
    with pytest.raises(InvalidInput):
        crossed.sigma_on_primitives(0, 2)


def test_lie_coherence_small():
    assert crossed.lie_coherence_check(5)


@pytest.mark.slow
def test_lie_coherence():
    assert crossed.lie_coherence_check(7)
