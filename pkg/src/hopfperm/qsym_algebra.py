"""Quasi-symmetric functions, the descent map and the cube description of products.

Basis elements are indexed by compositions; ``Composition.subset()`` gives the
equivalent subset of ``[n-1]`` with its ambient degree.

>>> from hopfperm.qsym_algebra import QM, product
>>> print(product(QM("(2)"), QM("(1,1)")))
M(1,3) + M(1,1,2) + M(1,2,1) + M(2,1,1) + M(3,1)
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .config import AmbientMismatch, InvalidInput, check_degree
from .linear import PermExpansion, QSymExpansion, TensorExpansion, linear_map
from .perm_core import (
    Composition,
    Permutation,
    Subset,
    _as_perm,
    compose,
    descent_set,
    direct_sum,
    global_descent_set,
    inverse,
    is_closed,
    shuffles,
    subsets,
    zeta_of_subset,
)
from .weak_order import mobius_row

__all__ = [
    "QM",
    "QF",
    "qunit",
    "quasi_shuffles",
    "m_quasi_shuffle",
    "f_product_qsym",
    "product",
    "m_coproduct",
    "f_coproduct",
    "coproduct",
    "counit",
    "tensor_product",
    "antipode_m",
    "antipode_f",
    "antipode",
    "f_to_m",
    "m_to_f",
    "to_basis",
    "descent_map",
    "splitting_Z",
    "CubeFace",
    "cons_p",
    "r_zeta",
    "r_zeta_direct",
    "face_of",
    "cube_product_witnesses",
    "cube_product_coefficient",
    "face_uniqueness_check",
    "mobius_descent_fiber",
    "expand_polynomial",
]


def _comp(alpha) -> Composition:
    if isinstance(alpha, Composition):
        return alpha
    if isinstance(alpha, Subset):
        return alpha.composition()
    return Composition(alpha)


def QM(alpha, coeff: int = 1) -> QSymExpansion:
    return QSymExpansion("M", {_comp(alpha): coeff})


def QF(alpha, coeff: int = 1) -> QSymExpansion:
    return QSymExpansion("F", {_comp(alpha): coeff})


def qunit(basis: str = "M") -> QSymExpansion:
    return QSymExpansion(basis, {Composition(()): 1})


def _tensor(basis: str, arity: int, terms) -> TensorExpansion:
    return TensorExpansion(basis, arity, terms, algebra="qsym")


# ---------------------------------------------------------------------------
# product


def quasi_shuffles(a: Sequence[int], b: Sequence[int]) -> Iterator[Composition]:
    """Every quasi-shuffle of ``a`` and ``b``, once per way of producing it."""
    if not a:
        yield Composition(b)
        return
    if not b:
        yield Composition(a)
        return
    for rest in quasi_shuffles(a[1:], b):
        yield Composition((a[0],) + tuple(rest))
    for rest in quasi_shuffles(a, b[1:]):
        yield Composition((b[0],) + tuple(rest))
    for rest in quasi_shuffles(a[1:], b[1:]):
        yield Composition((a[0] + b[0],) + tuple(rest))


@lru_cache(maxsize=4096)
def _qsh(a: Composition, b: Composition) -> tuple[tuple[Composition, int], ...]:
    acc: dict[Composition, int] = defaultdict(int)
    for g in quasi_shuffles(a, b):
        acc[g] += 1
    return tuple(acc.items())


def m_quasi_shuffle(alpha, beta) -> QSymExpansion:
    """``M_alpha M_beta`` as the sum over quasi-shuffles."""
    return QSymExpansion("M", dict(_qsh(_comp(alpha), _comp(beta))))


def f_product_qsym(alpha, beta) -> QSymExpansion:
    """``F_alpha F_beta`` through the monomial basis."""
    return m_to_f(product(f_to_m(QF(alpha)), f_to_m(QF(beta))))


def _bilinear(x: QSymExpansion, y: QSymExpansion, on_basis) -> QSymExpansion:
    acc: dict = defaultdict(int)
    for a, ca in x.as_dict().items():
        for b, cb in y.as_dict().items():
            for g, c in on_basis(a, b).as_dict().items():
                acc[g] += ca * cb * c
    return QSymExpansion(x.basis, acc)


def product(x: QSymExpansion, y: QSymExpansion) -> QSymExpansion:
    if x.dual or y.dual:
        raise InvalidInput("dual quasi-symmetric elements are handled in structure_lab")
    if x.basis != y.basis:
        y = to_basis(y, x.basis)
    if x.basis == "M":
        return _bilinear(x, y, m_quasi_shuffle)
    return m_to_f(_bilinear(f_to_m(x), f_to_m(y), m_quasi_shuffle))


# ---------------------------------------------------------------------------
# coproduct and antipode


def m_coproduct(alpha) -> TensorExpansion:
    """Deconcatenation."""
    a = _comp(alpha)
    return _tensor("M", 2, [((a[:p], a[p:]), 1) for p in range(len(a) + 1)])


def f_coproduct(alpha) -> TensorExpansion:
    """``Delta F_S = sum_p F_{S ∩ [p-1], p} ⊗ F_{(S - p) ∩ [n-p-1], n-p}``."""
    S = _comp(alpha).subset()
    n = S.n
    terms = []
    for p in range(n + 1):
        left = Subset([i for i in S.members if i < p], p)
        right = Subset([i - p for i in S.members if i > p], n - p)
        terms.append(((left.composition(), right.composition()), 1))
    return _tensor("F", 2, terms)


def coproduct(x: QSymExpansion) -> TensorExpansion:
    cop = m_coproduct if x.basis == "M" else f_coproduct
    return linear_map(x, cop, _tensor(x.basis, 2, ()))


def counit(x: QSymExpansion) -> int:
    return x.coefficient(Composition(()))


def tensor_product(a: TensorExpansion, b: TensorExpansion) -> TensorExpansion:
    if a.arity != b.arity or a.basis != b.basis:
        raise InvalidInput("tensor arity or basis mismatch")
    acc: dict = defaultdict(int)
    for ka, ca in a.as_dict().items():
        for kb, cb in b.as_dict().items():
            factors = [
                product(QSymExpansion(a.basis, {x: 1}), QSymExpansion(a.basis, {y: 1})).as_dict()
                for x, y in zip(ka, kb)
            ]
            for combo in itertools.product(*(f.items() for f in factors)):
                coeff = ca * cb
                for _, c in combo:
                    coeff *= c
                acc[tuple(g for g, _ in combo)] += coeff
    return _tensor(a.basis, a.arity, acc)


def antipode_m(alpha) -> QSymExpansion:
    """``S(M_alpha) = (-1)^{c(alpha)} sum_{I(beta) ⊆ I(alpha)} M_{reverse(beta)}``."""
    a = _comp(alpha)
    S = a.subset()
    sign = -1 if len(a) % 2 else 1
    acc: dict = defaultdict(int)
    for r in range(len(S) + 1):
        for sub in itertools.combinations(S.members, r):
            beta = Subset(sub, S.n).composition()
            acc[beta.reversed()] += sign
    return QSymExpansion("M", acc)


def antipode_f(alpha) -> QSymExpansion:
    """``S(F_T) = (-1)^n F_{complement(reverse(T))}``."""
    T = _comp(alpha).subset()
    sign = -1 if T.n % 2 else 1
    if T.n == 0:
        return qunit("F")
    return QSymExpansion("F", {T.reversed().complement().composition(): sign})


def antipode(x: QSymExpansion) -> QSymExpansion:
    return linear_map(x, antipode_m if x.basis == "M" else antipode_f, QSymExpansion(x.basis))


# ---------------------------------------------------------------------------
# basis change (Boolean Möbius function inline)


def _supersets(S: Subset) -> Iterator[Subset]:
    free = [i for i in range(1, S.n) if i not in S.members]
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            yield Subset(S.members + extra, S.n)


def f_to_m(x: QSymExpansion) -> QSymExpansion:
    """``F_S = sum_{S ⊆ T} M_T``."""
    if x.basis == "M":
        return x
    return linear_map(
        x,
        lambda a: QSymExpansion("M", {T.composition(): 1 for T in _supersets(a.subset())}),
        QSymExpansion("M", dual=x.dual),
    )


def m_to_f(x: QSymExpansion) -> QSymExpansion:
    """``M_S = sum_{S ⊆ T} (-1)^{|T - S|} F_T``."""
    if x.basis == "F":
        return x

    def on_basis(a: Composition) -> QSymExpansion:
        S = a.subset()
        return QSymExpansion(
            "F", {T.composition(): (-1) ** (len(T) - len(S)) for T in _supersets(S)}
        )

    return linear_map(x, on_basis, QSymExpansion("F", dual=x.dual))


def to_basis(x: QSymExpansion, basis: str) -> QSymExpansion:
    if basis == "F":
        return m_to_f(x)
    if basis == "M":
        return f_to_m(x)
    raise InvalidInput(f"unknown basis {basis!r}")


# ---------------------------------------------------------------------------
# descent map and its splitting


def descent_map(x: PermExpansion) -> QSymExpansion:
    """``F_u -> F_{Des(u)}``; ``M_u -> M_{GDes(u)}`` if ``u`` is closed, else 0."""
    if x.dual:
        raise InvalidInput("descent_map acts on primal elements")
    if x.basis == "F":
        return linear_map(x, lambda u: QF(descent_set(u)), QSymExpansion("F"))
    return linear_map(
        x,
        lambda u: QM(global_descent_set(u)) if is_closed(u) else QSymExpansion("M"),
        QSymExpansion("M"),
    )


def splitting_Z(x: QSymExpansion) -> PermExpansion:
    """``M_S -> M_{zeta_S}``; a coalgebra section of the descent map."""
    if x.basis != "M":
        x = f_to_m(x)
    return linear_map(
        x,
        lambda a: PermExpansion("M", {zeta_of_subset(a.total, a.subset()): 1}),
        PermExpansion("M"),
    )


# ---------------------------------------------------------------------------
# faces of the cube


@dataclass(frozen=True)
class CubeFace:
    """The Boolean interval ``[lower, lower ⊔ free]`` of subsets of ``[n-1]``."""

    lower: Subset
    free: Subset

    def __post_init__(self) -> None:
        if self.lower.n != self.free.n:
            raise AmbientMismatch("face bounds must share the ambient degree")
        if set(self.lower.members) & set(self.free.members):
            raise InvalidInput("lower and free parts of a face must be disjoint")

    @property
    def n(self) -> int:
        return self.lower.n

    @property
    def upper(self) -> Subset:
        return self.lower.union(self.free)

    @property
    def dimension(self) -> int:
        return len(self.free)

    def vertices(self) -> list[Subset]:
        out = []
        for r in range(len(self.free) + 1):
            for extra in itertools.combinations(self.free.members, r):
                out.append(Subset(self.lower.members + extra, self.n))
        return out


def _check_shuffle(zeta, p: int) -> Permutation:
    zeta = _as_perm(zeta)
    n = len(zeta)
    if not 0 <= p <= n:
        raise InvalidInput(f"p={p} out of range for degree {n}")
    if any(d != p for d in descent_set(zeta).members):
        raise InvalidInput(f"{zeta} is not in Sh({p},{n - p})")
    return zeta


def cons_p(zeta, p: int) -> Subset:
    """``{i : zeta^-1(i) + 1 = zeta^-1(i+1), zeta^-1(i) != p}``."""
    zeta = _check_shuffle(zeta, p)
    n = len(zeta)
    zi = inverse(zeta)
    return Subset((i for i in range(1, n) if zi[i - 1] + 1 == zi[i] and zi[i - 1] != p), n)


def r_zeta_direct(S: Subset, T: Subset, zeta) -> Subset:
    """``Des((zeta_S x zeta_T) zeta^-1)``."""
    zeta = _check_shuffle(zeta, S.n)
    if S.n + T.n != len(zeta):
        raise AmbientMismatch("S and T must split the degree of zeta")
    w = compose(direct_sum(zeta_of_subset(S.n, S), zeta_of_subset(T.n, T)), inverse(zeta))
    return descent_set(w)


def r_zeta(S: Subset, T: Subset, zeta) -> Subset:
    """``Des(zeta^-1) ⊔ (Cons_p(zeta) ∩ zeta(S ∪ (p + T)))``."""
    p = S.n
    zeta = _check_shuffle(zeta, p)
    if p + T.n != len(zeta):
        raise AmbientMismatch("S and T must split the degree of zeta")
    n = len(zeta)
    image = {zeta[i - 1] for i in S.members} | {zeta[p + t - 1] for t in T.members}
    cons = set(cons_p(zeta, p).members)
    return Subset(set(descent_set(inverse(zeta)).members) | (cons & image), n)


def face_of(zeta, p: int) -> CubeFace:
    zeta = _check_shuffle(zeta, p)
    return CubeFace(descent_set(inverse(zeta)), cons_p(zeta, p))


def cube_product_witnesses(S: Subset, T: Subset, R: Subset) -> list[Permutation]:
    """``zeta`` in ``Sh(p, q)`` for which ``(S, T)`` is the top of ``r_zeta^-1[∅, R]``."""
    p, q = S.n, T.n
    if R.n != p + q:
        raise AmbientMismatch(f"R has ambient {R.n}, expected {p + q}")
    out = []
    Rset = set(R.members)
    for z in shuffles(p, q):
        below = [
            (S2, T2)
            for S2 in subsets(p)
            for T2 in subsets(q)
            if set(r_zeta(S2, T2, z).members) <= Rset
        ]
        if not below:
            continue
        top_s = Subset(set().union(*(s.members for s, _ in below)), p)
        top_t = Subset(set().union(*(t.members for _, t in below)), q)
        if (top_s, top_t) not in below:
            raise AssertionError("preimage of a lower interval has no maximum")
        if (top_s, top_t) == (S, T):
            out.append(z)
    return out


def cube_product_coefficient(S: Subset, T: Subset, R: Subset) -> int:
    return len(cube_product_witnesses(S, T, R))


def face_uniqueness_check(n: int) -> bool:
    """Distinct ``(zeta, p)`` with ``0 < p < n`` give distinct faces of the cube."""
    seen: dict[CubeFace, tuple] = {}
    for p in range(1, n):
        for z in shuffles(p, n - p):
            face = face_of(z, p)
            if face in seen:
                return False
            seen[face] = (z, p)
    return True


def mobius_descent_fiber(u, S) -> int:
    """``sum mu(u, v)`` over ``v >= u`` with ``Des(v) = S``."""
    u = _as_perm(u)
    S = S if isinstance(S, Subset) else Subset(S, len(u))
    if S.n != len(u):
        raise AmbientMismatch("S must have the degree of u as ambient")
    return sum(c for v, c in mobius_row(u).items() if descent_set(v) == S)


# ---------------------------------------------------------------------------
# polynomial realization

MAX_POLY_VARS = 4
MAX_POLY_DEGREE = 8


def expand_polynomial(x: QSymExpansion, m: int) -> dict[tuple[int, ...], int]:
    """Truncate to the variables ``x_1, ..., x_m``; monomials are exponent vectors."""
    if m < 1:
        raise InvalidInput("need at least one variable")
    if m > MAX_POLY_VARS or x.max_degree() > MAX_POLY_DEGREE:
        raise InvalidInput(
            f"polynomial expansion is limited to {MAX_POLY_VARS} variables and degree {MAX_POLY_DEGREE}"
        )
    check_degree(x.max_degree())
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for a, c in x.as_dict().items():
        if x.basis == "M":
            for idx in itertools.combinations(range(m), len(a)):
                e = [0] * m
                for i, part in zip(idx, a):
                    e[i] += part
                out[tuple(e)] += c
        else:
            n = a.total
            strict = set(a.subset().members)
            for idx in itertools.combinations_with_replacement(range(m), n):
                if any(idx[p - 1] == idx[p] for p in strict):
                    continue
                e = [0] * m
                for i in idx:
                    e[i] += 1
                out[tuple(e)] += c
    return {k: v for k, v in out.items() if v}

