"""The Hopf algebra of permutations in its fundamental (F) and monomial (M) bases.

The F basis multiplies by shuffling and comultiplies by cutting and
standardizing.  The M basis is obtained by Möbius inversion over the weak
order; its product, antipode and convolution powers are computed from the
counting formulas, each of which has an independent route through the F basis.

>>> from hopfperm.ssym_algebra import F, M, m_to_f
>>> print(m_to_f(M("4123")))
F[4123] - F[4132] - F[4213] + F[4321]
>>> print(F("1") * F("1"))
F[12] + F[21]
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Sequence

import numpy as np

from .config import DegreeMismatch, InvalidInput, check_degree
from .linear import PermExpansion, TensorExpansion, linear_map
from .perm_core import (
    Permutation,
    Subset,
    _as_perm,
    _std,
    augmented_global_descents,
    compose,
    coset_reps,
    descent_set,
    direct_sum,
    global_descent_set,
    inverse,
    projection,
    shuffles,
    subsets,
)
from .weak_order import (
    _enumeration,
    covers,
    inversion_mask,
    leq,
    mobius_row,
    upset,
)

__all__ = [
    "F",
    "M",
    "unit",
    "f_product",
    "f_coproduct",
    "m_coproduct",
    "m_to_f",
    "f_to_m",
    "to_basis",
    "alpha",
    "alpha_witnesses",
    "multi_alpha_witnesses",
    "m_product",
    "product",
    "coproduct",
    "counit",
    "tensor_product",
    "higher_coproduct",
    "higher_product",
    "pi_power",
    "pi_power_closed",
    "lambda_subsets",
    "lambda_coefficient",
    "antipode_f",
    "a_set",
    "c_set",
    "alpha_s",
    "gamma_s",
    "kappa",
    "antipode_m",
    "antipode",
    "antipode_power",
    "takeuchi_antipode",
    "expand_word_series",
]


def F(u, coeff: int = 1) -> PermExpansion:
    return PermExpansion("F", {_as_perm(u): coeff})


def M(u, coeff: int = 1) -> PermExpansion:
    return PermExpansion("M", {_as_perm(u): coeff})


def unit(basis: str = "F") -> PermExpansion:
    return PermExpansion(basis, {Permutation.trusted(()): 1})


def _tensor(basis: str, arity: int, terms) -> TensorExpansion:
    return TensorExpansion(basis, arity, terms, algebra="ssym")


def _cut(u: Sequence[int], cuts: Sequence[int]) -> tuple[Permutation, ...]:
    return tuple(Permutation.trusted(_std(u[cuts[i]:cuts[i + 1]])) for i in range(len(cuts) - 1))


# ---------------------------------------------------------------------------
# fundamental basis


def f_product(u, v) -> PermExpansion:
    """Shuffle product: sum of ``F[(u x v) zeta^-1]`` over ``zeta`` in ``Sh(p, q)``."""
    u, v = _as_perm(u), _as_perm(v)
    uv = direct_sum(u, v)
    words = [compose(uv, inverse(z)) for z in shuffles(len(u), len(v))]
    if len(set(words)) != len(words):
        raise AssertionError("shuffle terms are not distinct")
    return PermExpansion("F", {w: 1 for w in words})


def f_coproduct(u) -> TensorExpansion:
    u = _as_perm(u)
    n = len(u)
    return _tensor("F", 2, [(_cut(u, (0, p, n)), 1) for p in range(n + 1)])


def m_coproduct(u) -> TensorExpansion:
    """Cuts only at global descents (and at both ends)."""
    u = _as_perm(u)
    n = len(u)
    return _tensor("M", 2, [(_cut(u, (0, p, n)), 1) for p in augmented_global_descents(u)])


# ---------------------------------------------------------------------------
# basis change


def m_to_f(x: PermExpansion) -> PermExpansion:
    """``M_u = sum_{u <= v} mu(u, v) F_v``."""
    if x.basis == "F":
        return x
    return linear_map(x, lambda u: PermExpansion("F", mobius_row(u)), PermExpansion("F", dual=x.dual))


def f_to_m(x: PermExpansion) -> PermExpansion:
    """``F_u = sum_{u <= v} M_v``."""
    if x.basis == "M":
        return x
    return linear_map(
        x, lambda u: PermExpansion("M", {v: 1 for v in upset(u)}), PermExpansion("M", dual=x.dual)
    )


def to_basis(x: PermExpansion, basis: str) -> PermExpansion:
    if basis == "F":
        return m_to_f(x)
    if basis == "M":
        return f_to_m(x)
    raise InvalidInput(f"unknown basis {basis!r}")


# ---------------------------------------------------------------------------
# monomial product


def _partial_sums(blocks: Sequence[Sequence[int]]) -> Subset:
    sizes = [len(b) for b in blocks]
    n = sum(sizes)
    cuts, acc = [], 0
    for s in sizes[:-1]:
        acc += s
        if 0 < acc < n:
            cuts.append(acc)
    return Subset(cuts, n)


def _is_max_below(blocks, zeta, w, exhaustive: bool) -> bool:
    """Is ``blocks`` the maximum of ``{b' : rho_zeta(b') <= w}``?

    With ``exhaustive`` every ``b' >= blocks`` is tried, which is the defining
    condition.  Otherwise only upper covers are tried: the preimage of a
    lower interval under the order-preserving map ``rho_zeta`` is a lower set,
    so anything strictly above ``blocks`` in it forces a cover in it too.
    """
    zi = inverse(zeta)
    if not leq(compose(direct_sum(*blocks), zi), w):
        return False
    if exhaustive:
        choices = [upset(b) for b in blocks]
        for bigger in itertools.product(*choices):
            if tuple(bigger) == tuple(blocks):
                continue
            if leq(compose(direct_sum(*bigger), zi), w):
                return False
        return True
    for i, b in enumerate(blocks):
        for c in covers(b):
            bigger = list(blocks)
            bigger[i] = c
            if leq(compose(direct_sum(*bigger), zi), w):
                return False
    return True


def multi_alpha_witnesses(blocks: Sequence, w) -> list[Permutation]:
    """Coset representatives ``zeta`` for which ``blocks`` is the top of its face below ``w``.

    Direct transcription of the defining conditions: ``rho_zeta(blocks) <= w``
    and no ``blocks' >= blocks`` other than ``blocks`` itself has
    ``rho_zeta(blocks') <= w``.
    """
    blocks = [_as_perm(b) for b in blocks]
    w = _as_perm(w)
    S = _partial_sums(blocks)
    if S.n != len(w):
        raise DegreeMismatch(f"blocks have total degree {S.n}, w has degree {len(w)}")
    return [z for z in coset_reps(S.n, S) if _is_max_below(blocks, z, w, exhaustive=True)]


def alpha_witnesses(u, v, w) -> list[Permutation]:
    """The set ``A^w_{u,v}`` of shuffles counted by ``alpha(u, v, w)``."""
    return multi_alpha_witnesses([u, v], w)


def alpha(u, v, w) -> int:
    return len(alpha_witnesses(u, v, w))


def _max_face_counts(blocks: Sequence[Permutation], reps, project=None) -> dict[Permutation, int]:
    """Sum over ``zeta`` in ``reps`` of the indicator that ``blocks`` is maximal below ``w``.

    Returns ``{w: count}`` for every ``w`` with a nonzero count.  ``project``
    optionally replaces the cover test: it maps ``zeta`` to the list of
    inversion masks that must *not* lie below ``w``.
    """
    n = sum(len(b) for b in blocks)
    perms, _, masks, _ = _enumeration(n)
    counts: dict[Permutation, int] = defaultdict(int)
    for z in reps:
        zi = inverse(z)
        base = inversion_mask(compose(direct_sum(*blocks), zi))
        if project is None:
            forbidden = []
            for i, b in enumerate(blocks):
                for c in covers(b):
                    bigger = list(blocks)
                    bigger[i] = c
                    forbidden.append(inversion_mask(compose(direct_sum(*bigger), zi)))
        else:
            forbidden = project(z, zi)
        ok = (masks & base) == base
        for fm in forbidden:
            ok &= (masks & fm) != fm
        for k in np.flatnonzero(ok):
            counts[perms[k]] += 1
    return counts


def _multi_product_m(blocks: Sequence[Permutation]) -> PermExpansion:
    S = _partial_sums(blocks)
    check_degree(S.n)
    return PermExpansion("M", _max_face_counts(blocks, coset_reps(S.n, S)))


def m_product(u, v) -> PermExpansion:
    """``M_u M_v = sum_w alpha^w_{u,v} M_w``."""
    return _multi_product_m([_as_perm(u), _as_perm(v)])


# ---------------------------------------------------------------------------
# generic structure maps


def _bilinear(x: PermExpansion, y: PermExpansion, on_basis) -> PermExpansion:
    acc: dict = defaultdict(int)
    for u, a in x.as_dict().items():
        for v, b in y.as_dict().items():
            for w, c in on_basis(u, v).as_dict().items():
                acc[w] += a * b * c
    return PermExpansion(x.basis, acc)


def product(x: PermExpansion, y: PermExpansion) -> PermExpansion:
    if x.dual or y.dual:
        raise InvalidInput("use structure_lab.dual_product for dual elements")
    if x.basis != y.basis:
        y = to_basis(y, x.basis)
    return _bilinear(x, y, f_product if x.basis == "F" else m_product)


def coproduct(x: PermExpansion) -> TensorExpansion:
    if x.dual:
        raise InvalidInput("use structure_lab.dual_coproduct_f for dual elements")
    cop = f_coproduct if x.basis == "F" else m_coproduct
    return linear_map(x, cop, _tensor(x.basis, 2, ()))


def counit(x: PermExpansion) -> int:
    return x.coefficient(())


def tensor_product(a: TensorExpansion, b: TensorExpansion) -> TensorExpansion:
    """Factorwise product ``(x1 ⊗ x2)(y1 ⊗ y2) = x1 y1 ⊗ x2 y2``."""
    if a.arity != b.arity or a.basis != b.basis:
        raise InvalidInput("tensor arity or basis mismatch")
    mul = f_product if a.basis == "F" else m_product
    acc: dict = defaultdict(int)
    for ka, ca in a.as_dict().items():
        for kb, cb in b.as_dict().items():
            factors = [mul(x, y).as_dict() for x, y in zip(ka, kb)]
            for combo in itertools.product(*(f.items() for f in factors)):
                coeff = ca * cb
                key = []
                for w, c in combo:
                    key.append(w)
                    coeff *= c
                acc[tuple(key)] += coeff
    return _tensor(a.basis, a.arity, acc)


def _chains(cut_points: Sequence[int], k: int, n: int):
    for mid in itertools.combinations_with_replacement(cut_points, k):
        yield (0,) + mid + (n,)


def higher_coproduct(x: PermExpansion, k: int) -> TensorExpansion:
    """``Delta^(k)`` with values in the ``(k+1)``-fold tensor power.

    In the F basis the cuts run over all ``0 <= p_1 <= ... <= p_k <= n``; in
    the M basis only over chains in ``GDes(u) ∪ {0, n}``.
    """
    if k < 1:
        raise InvalidInput("k must be at least 1")

    def on_basis(u):
        n = len(u)
        points = range(n + 1) if x.basis == "F" else augmented_global_descents(u)
        return _tensor(x.basis, k + 1, [(_cut(u, c), 1) for c in _chains(points, k, n)])

    return linear_map(x, on_basis, _tensor(x.basis, k + 1, ()))


def higher_product(blocks: Sequence, basis: str = "F") -> PermExpansion:
    """Product of several basis elements in one step."""
    blocks = [_as_perm(b) for b in blocks]
    if not blocks:
        return unit(basis)
    S = _partial_sums(blocks)
    if basis == "F":
        uv = direct_sum(*blocks)
        return PermExpansion("F", {compose(uv, inverse(z)): 1 for z in coset_reps(S.n, S)})
    if basis == "M":
        return _multi_product_m(blocks)
    raise InvalidInput(f"unknown basis {basis!r}")


# ---------------------------------------------------------------------------
# convolution powers of pi = id - u.eps


def _iterate_coproduct_f(x: PermExpansion, k: int) -> TensorExpansion:
    """``Delta^(k)`` built by repeatedly applying the binary coproduct to the last factor."""
    t = _tensor("F", 1, [((u,), c) for u, c in x.as_dict().items()])
    for arity in range(1, k + 1):
        acc: dict = defaultdict(int)
        for key, c in t.as_dict().items():
            for (a, b), d in f_coproduct(key[-1]).as_dict().items():
                acc[key[:-1] + (a, b)] += c * d
        t = _tensor("F", arity + 1, acc)
    return t


def pi_power(x: PermExpansion, k: int) -> PermExpansion:
    """``pi^{*k}(x) = m^(k-1) pi^{⊗k} Delta^(k-1)(x)`` computed generically in the F basis."""
    if k < 0:
        raise InvalidInput("k must be non-negative")
    basis = x.basis
    xf = m_to_f(x)
    if k == 0:
        return to_basis(xf.homogeneous(0), basis)
    if k == 1:
        return to_basis(xf - xf.homogeneous(0), basis)
    t = _iterate_coproduct_f(xf, k - 1)
    acc: dict = defaultdict(int)
    for key, c in t.as_dict().items():
        if any(len(f) == 0 for f in key):
            continue
        prod = F(key[0])
        for f in key[1:]:
            prod = _bilinear(prod, F(f), f_product)
        for w, d in prod.as_dict().items():
            acc[w] += c * d
    return to_basis(PermExpansion("F", acc), basis)


def _subsets_of_size(members: Sequence[int], size: int, n: int) -> list[Subset]:
    return [Subset(c, n) for c in itertools.combinations(members, size)]


def pi_power_closed(v, k: int, basis: str = "F") -> PermExpansion:
    """Closed forms for ``pi^{*k}`` on a single basis element.

    F basis: ``sum_w #{S, |S| = k-1 : Des(w^-1 v_S) ⊆ S} F_w``.
    M basis: ``sum_w sum_{S ⊆ GDes(v), |S| = k-1} alpha_S(v, w) M_w``.
    """
    v = _as_perm(v)
    n = len(v)
    if k == 0:
        return PermExpansion(basis, {v: 1} if n == 0 else {})
    if n == 0:
        return PermExpansion(basis, {})
    acc: dict = defaultdict(int)
    if basis == "F":
        for S in _subsets_of_size(range(1, n), k - 1, n):
            vs = projection(v, S)
            for z in coset_reps(n, S):
                acc[compose(vs, inverse(z))] += 1
    elif basis == "M":
        for S in _subsets_of_size(global_descent_set(v).members, k - 1, n):
            for w, c in _a_counts(v, S, with_c=False).items():
                acc[w] += c
    else:
        raise InvalidInput(f"unknown basis {basis!r}")
    return PermExpansion(basis, acc)


# ---------------------------------------------------------------------------
# antipode, fundamental basis


def lambda_subsets(v, w) -> list[Subset]:
    """Subsets ``S`` of ``[n-1]`` with ``Des(w^-1 v_S) ⊆ S``."""
    v, w = _as_perm(v), _as_perm(w)
    if len(v) != len(w):
        raise DegreeMismatch("v and w must have the same degree")
    n = len(v)
    wi = inverse(w)
    return [S for S in subsets(n) if descent_set(compose(wi, projection(v, S))).issubset(S)]


def lambda_coefficient(v, w) -> int:
    """Odd-sized qualifying subsets minus even-sized ones."""
    return sum(1 if len(S) % 2 else -1 for S in lambda_subsets(v, w))


def antipode_f(v) -> PermExpansion:
    """``S(F_v) = sum_w lambda(v, w) F_w``.

    For each ``S`` the qualifying ``w`` are exactly ``v_S zeta^-1`` with
    ``zeta`` in ``Sh(S)``, so the signed count is accumulated directly.
    """
    v = _as_perm(v)
    n = len(v)
    if n == 0:
        return unit("F")
    acc: dict = defaultdict(int)
    for S in subsets(n):
        sign = 1 if len(S) % 2 else -1
        vs = projection(v, S)
        for z in coset_reps(n, S):
            acc[compose(vs, inverse(z))] += sign
    return PermExpansion("F", acc)


# ---------------------------------------------------------------------------
# antipode, monomial basis


def _check_s(v: Permutation, S) -> Subset:
    if not isinstance(S, Subset):
        S = Subset(S, len(v))
    if S.n != len(v):
        raise DegreeMismatch("subset ambient must equal the degree of v")
    return S


def _a_conditions(v, w, S, zeta, with_c: bool) -> bool:
    zi = inverse(zeta)
    if not leq(compose(projection(v, S), zi), w):
        return False
    for v2 in upset(v):
        if v2 != v and leq(compose(projection(v2, S), zi), w):
            return False
    if with_c:
        des = set(descent_set(zeta).members)
        for R in subsets(len(v)):
            if R != S and des <= set(R.members) <= set(S.members):
                if leq(compose(projection(v, R), zi), w):
                    return False
    return True


def a_set(v, w, S) -> list[Permutation]:
    """``A_S(v, w)``: shuffles ``zeta`` in ``Sh(S)`` meeting conditions (i) and (ii)."""
    v, w = _as_perm(v), _as_perm(w)
    S = _check_s(v, S)
    return [z for z in coset_reps(len(v), S) if _a_conditions(v, w, S, z, with_c=False)]


def c_set(v, w, S) -> list[Permutation]:
    """``C_S(v, w)``: the elements of ``A_S(v, w)`` meeting condition (iii) as well."""
    v, w = _as_perm(v), _as_perm(w)
    S = _check_s(v, S)
    return [z for z in coset_reps(len(v), S) if _a_conditions(v, w, S, z, with_c=True)]


def alpha_s(v, w, S) -> int:
    return len(a_set(v, w, S))


def gamma_s(v, w, T) -> int:
    """Boolean Möbius inversion ``sum_{S ⊆ T} (-1)^{|T - S|} alpha_S(v, w)``."""
    v = _as_perm(v)
    T = _check_s(v, T)
    total = 0
    for r in range(len(T) + 1):
        for S in _subsets_of_size(T.members, r, T.n):
            total += (-1) ** (len(T) - r) * alpha_s(v, w, S)
    return total


def kappa(v, w) -> int:
    v = _as_perm(v)
    return len(c_set(v, w, global_descent_set(v)))


def _a_counts(v: Permutation, S: Subset, with_c: bool) -> dict[Permutation, int]:
    """``{w: #A_S(v, w)}`` (or ``#C_S``) for all ``w`` at once."""
    n = len(v)
    vs = projection(v, S)
    up = [projection(c, S) for c in covers(v)]
    S_set = set(S.members)

    def forbidden(z, zi):
        out = [inversion_mask(compose(p, zi)) for p in up]
        if with_c:
            des = set(descent_set(z).members)
            for R in subsets(n):
                r = set(R.members)
                if des <= r and r < S_set:
                    out.append(inversion_mask(compose(projection(v, R), zi)))
        return out

    return _max_face_counts([vs], coset_reps(n, S), project=forbidden) if n else {v: 1}


def antipode_m(v) -> PermExpansion:
    """``S(M_v) = (-1)^{#GDes(v)+1} sum_w kappa(v, w) M_w``."""
    v = _as_perm(v)
    n = len(v)
    if n == 0:
        return unit("M")
    S = global_descent_set(v)
    sign = -1 if len(S) % 2 == 0 else 1
    return PermExpansion("M", {w: sign * c for w, c in _a_counts(v, S, with_c=True).items()})


def antipode(x: PermExpansion) -> PermExpansion:
    if x.dual:
        raise InvalidInput("the antipode here acts on the primal algebra")
    return linear_map(x, antipode_f if x.basis == "F" else antipode_m, PermExpansion(x.basis))


def antipode_power(x: PermExpansion, k: int) -> PermExpansion:
    if k < 0:
        raise InvalidInput("k must be non-negative")
    for _ in range(k):
        x = antipode(x)
    return x


def takeuchi_antipode(x: PermExpansion) -> PermExpansion:
    """``sum_k (-1)^k pi^{*k}(x)``, truncated at the top degree of ``x``."""
    total = PermExpansion(x.basis)
    for k in range(x.max_degree() + 1):
        term = pi_power(x, k)
        total = total + (term if k % 2 == 0 else -term)
    return total


# ---------------------------------------------------------------------------
# realization by noncommutative power series


def expand_word_series(u, m: int) -> dict[tuple[int, ...], int]:
    """Truncation of ``F_u`` to noncommuting variables ``x_1, ..., x_m``.

    Sum over ``i_1 <= ... <= i_n`` (strict at the descents of ``u``) of the
    word ``x_{i_{u^-1(1)}} ... x_{i_{u^-1(n)}}``; words are tuples of indices.
    """
    u = _as_perm(u)
    if m < 1:
        raise InvalidInput("need at least one variable")
    check_degree(len(u))
    n = len(u)
    des = set(descent_set(u).members)
    ui = inverse(u)
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for idx in itertools.combinations_with_replacement(range(1, m + 1), n):
        if any(idx[p - 1] == idx[p] for p in des):
            continue
        out[tuple(idx[ui[j] - 1] for j in range(n))] += 1
    return dict(out)

