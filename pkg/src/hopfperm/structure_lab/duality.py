"""Self-duality of the permutation algebra and its image on quasi-symmetric functions.

Dual basis elements are ordinary expansions carrying ``dual=True``.  The
isomorphism ``Theta`` sends ``F*_u`` to ``F_{u^-1}`` and ``M*_u`` to
``sum_v theta(u, v) M_v`` where ``theta(u, v) = #{x : x <= u, x^-1 <= v}``.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from functools import lru_cache

import numpy as np
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from ..config import DegreeMismatch, InvalidInput
from ..linear import PermExpansion, QSymExpansion, TensorExpansion, linear_map
from ..perm_core import (
    Composition,
    Permutation,
    _as_perm,
    compose,
    descent_set,
    direct_sum,
    inverse,
    permutations,
    projection,
    shuffles,
    subsets,
    zeta_of_subset,
    zeta_pq,
)
from ..ssym_algebra import antipode_f, antipode_m, kappa, m_product, to_basis
from ..weak_order import _enumeration, downset, leq, mobius
from ..qsym_algebra import descent_map
from .descent_pairs import PairTable, descent_pair_counts

__all__ = [
    "theta",
    "theta_matrix",
    "theta_table",
    "theta_determinant",
    "theta_map",
    "dual_to_basis",
    "dual_product",
    "dual_product_m",
    "dual_product_f",
    "dual_coproduct",
    "dual_coproduct_f",
    "dual_coproduct_m",
    "descent_map_dual",
    "alpha_matrix",
    "verify_theta_recursion",
    "antipode_matrix",
    "kappa_matrix",
    "verify_kappa_theta",
    "lambda_matrix",
    "lambda_symmetry",
    "lambda_symmetry_by_counts",
    "phi_map",
]


def theta(u, v) -> int:
    u, v = _as_perm(u), _as_perm(v)
    if len(u) != len(v):
        raise DegreeMismatch("theta needs permutations of equal degree")
    return sum(1 for x in permutations(len(u)) if leq(x, u) and leq(inverse(x), v))


@lru_cache(maxsize=None)
def _theta_array(n: int) -> np.ndarray:
    perms, index, masks, _ = _enumeration(n)
    down = np.array([(masks & ~np.int64(m)) == 0 for m in masks], dtype=np.int64)
    inv_pos = [index[inverse(x)] for x in perms]
    # down_inv[v, x] = [x^-1 <= v]
    down_inv = down[:, inv_pos]
    out = down @ down_inv.T
    out.setflags(write=False)
    return out


def theta_matrix(n: int) -> np.ndarray:
    """``theta`` on ``S_n`` in lexicographic order."""
    return np.array(_theta_array(n))


def theta_table(n: int) -> PairTable:
    return PairTable(n, "theta", tuple(permutations(n)), theta_matrix(n))


def theta_determinant(n: int) -> int:
    m = theta_matrix(n)
    size = m.shape[0]
    dm = DomainMatrix([[ZZ(int(x)) for x in row] for row in m], (size, size), ZZ)
    return int(dm.det())


def _theta_row(u: Permutation) -> dict[Permutation, int]:
    n = len(u)
    perms, index, _, _ = _enumeration(n)
    row = _theta_array(n)[index[u]]
    return {perms[k]: int(row[k]) for k in np.flatnonzero(row)}


def _require_dual(x, what: str) -> None:
    if not x.dual:
        raise InvalidInput(f"{what} expects a dual-basis element")


def theta_map(x: PermExpansion, basis: str | None = None) -> PermExpansion:
    """``Theta`` on the dual; the image is returned in ``basis`` (default: the input's)."""
    _require_dual(x, "theta_map")
    if x.basis == "F":
        out = linear_map(x, lambda u: PermExpansion("F", {inverse(u): 1}), PermExpansion("F"))
    else:
        out = linear_map(x, lambda u: PermExpansion("M", _theta_row(u)), PermExpansion("M"))
    if basis is None or basis == out.basis:
        return out
    return to_basis(out, basis)


def dual_to_basis(x: PermExpansion, basis: str) -> PermExpansion:
    """Change basis in the dual: ``M*_u = sum_{x <= u} F*_x`` and its inverse."""
    _require_dual(x, "dual_to_basis")
    if x.basis == basis:
        return x
    if basis == "F":
        return linear_map(
            x, lambda u: PermExpansion("F", {w: 1 for w in downset(u)}, dual=True),
            PermExpansion("F", dual=True),
        )
    if basis == "M":
        return linear_map(
            x,
            lambda u: PermExpansion("M", {w: mobius(w, u) for w in downset(u)}, dual=True),
            PermExpansion("M", dual=True),
        )
    raise InvalidInput(f"unknown basis {basis!r}")


# ---------------------------------------------------------------------------
# dual Hopf structure


def dual_product_m(u, v) -> PermExpansion:
    """``M*_u M*_v = M*_{zeta_{p,q} (u x v)}``."""
    u, v = _as_perm(u), _as_perm(v)
    w = compose(zeta_pq(len(u), len(v)), direct_sum(u, v))
    return PermExpansion("M", {w: 1}, dual=True)


def dual_product_f(u, v) -> PermExpansion:
    """``F*_u F*_v``: every ``w`` whose two halves standardize to ``u`` and ``v``."""
    u, v = _as_perm(u), _as_perm(v)
    p, q = len(u), len(v)
    n = p + q
    acc = {}
    for left in itertools.combinations(range(1, n + 1), p):
        right = [x for x in range(1, n + 1) if x not in left]
        w = tuple(left[i - 1] for i in u) + tuple(right[i - 1] for i in v)
        acc[Permutation.trusted(w)] = 1
    return PermExpansion("F", acc, dual=True)


def dual_product(x: PermExpansion, y: PermExpansion) -> PermExpansion:
    _require_dual(x, "dual_product")
    _require_dual(y, "dual_product")
    if y.basis != x.basis:
        y = dual_to_basis(y, x.basis)
    on = dual_product_m if x.basis == "M" else dual_product_f
    acc: dict = defaultdict(int)
    for a, ca in x.as_dict().items():
        for b, cb in y.as_dict().items():
            for w, c in on(a, b).as_dict().items():
                acc[w] += ca * cb * c
    return PermExpansion(x.basis, acc, dual=True)


def _factor(w: Permutation, p: int):
    """Split ``w`` in ``S_p x S_q``, or ``None`` when it is not a block permutation."""
    if set(w[:p]) != set(range(1, p + 1)):
        return None
    return Permutation.trusted(w[:p]), Permutation.trusted(tuple(x - p for x in w[p:]))


def dual_coproduct_f(w) -> TensorExpansion:
    """Transpose of the shuffle product: ``zeta`` in ``Sh(p, q)`` with ``w zeta`` in ``S_p x S_q``."""
    w = _as_perm(w)
    n = len(w)
    acc: dict = defaultdict(int)
    for p in range(n + 1):
        for z in shuffles(p, n - p):
            f = _factor(compose(w, z), p)
            if f is not None:
                acc[f] += 1
    return TensorExpansion("F", 2, acc, dual=True)


@lru_cache(maxsize=None)
def _m_products(p: int, q: int) -> dict[tuple[Permutation, Permutation], dict]:
    return {(u, v): m_product(u, v).as_dict() for u in permutations(p) for v in permutations(q)}


def dual_coproduct_m(w) -> TensorExpansion:
    """Transpose of the monomial product: ``sum alpha^w_{u,v} M*_u ⊗ M*_v``."""
    w = _as_perm(w)
    n = len(w)
    acc = {}
    for p in range(n + 1):
        for (u, v), prod in _m_products(p, n - p).items():
            c = prod.get(w, 0)
            if c:
                acc[(u, v)] = c
    return TensorExpansion("M", 2, acc, dual=True)


def dual_coproduct(x: PermExpansion) -> TensorExpansion:
    _require_dual(x, "dual_coproduct")
    on = dual_coproduct_m if x.basis == "M" else dual_coproduct_f
    return linear_map(x, on, TensorExpansion(x.basis, 2, dual=True))


def descent_map_dual(x: QSymExpansion) -> PermExpansion:
    """Transpose of the descent map: ``F*_S -> sum_{Des u = S} F*_u``, ``M*_S -> M*_{zeta_S}``."""
    _require_dual(x, "descent_map_dual")
    if x.basis == "F":

        def on(alpha: Composition) -> PermExpansion:
            S = alpha.subset()
            return PermExpansion(
                "F", {u: 1 for u in permutations(S.n) if descent_set(u) == S}, dual=True
            )

    else:

        def on(alpha: Composition) -> PermExpansion:
            S = alpha.subset()
            return PermExpansion("M", {zeta_of_subset(S.n, S): 1}, dual=True)

    return linear_map(x, on, PermExpansion(x.basis, dual=True))


# ---------------------------------------------------------------------------
# matrix identities


def alpha_matrix(p: int, q: int, w) -> np.ndarray:
    """``alpha^w_{u,v}`` with rows ``u`` in ``S_p`` and columns ``v`` in ``S_q``."""
    w = _as_perm(w)
    if len(w) != p + q:
        raise DegreeMismatch("w must have degree p + q")
    P, Q = permutations(p), permutations(q)
    prods = _m_products(p, q)
    return np.array([[prods[(u, v)].get(w, 0) for v in Q] for u in P], dtype=np.int64)


def verify_theta_recursion(p: int, q: int) -> bool:
    """``(theta alpha^w theta)(u, v) = theta(zeta_{p,q} (u x v), w)`` for all ``u, v, w``."""
    n = p + q
    tp, tq, tn = _theta_array(p), _theta_array(q), _theta_array(n)
    _, index, _, _ = _enumeration(n)
    P, Q = permutations(p), permutations(q)
    z = zeta_pq(p, q)
    rows = np.array([[index[compose(z, direct_sum(u, v))] for v in Q] for u in P], dtype=np.int64)
    for w in permutations(n):
        lhs = tp @ alpha_matrix(p, q, w) @ tq
        rhs = tn[rows, index[w]]
        if not np.array_equal(lhs, rhs):
            return False
    return True


@lru_cache(maxsize=None)
def _antipode_array(n: int) -> np.ndarray:
    perms, index, _, _ = _enumeration(n)
    out = np.zeros((len(perms), len(perms)), dtype=np.int64)
    for i, v in enumerate(perms):
        for w, c in antipode_m(v).as_dict().items():
            out[i, index[w]] = c
    out.setflags(write=False)
    return out


def antipode_matrix(n: int) -> np.ndarray:
    """Signed antipode on the monomial basis: entry ``(v, w)`` is the coefficient of ``M_w`` in ``S(M_v)``."""
    return np.array(_antipode_array(n))


def kappa_matrix(n: int) -> np.ndarray:
    """The unsigned counts ``kappa(v, w)``."""
    perms = permutations(n)
    return np.array([[kappa(v, w) for w in perms] for v in perms], dtype=np.int64)


def verify_kappa_theta(n: int, signed: bool = True) -> bool:
    """``K^t theta = theta K``; ``K`` is the antipode matrix, or the bare ``kappa`` counts if unsigned."""
    K = antipode_matrix(n) if signed else kappa_matrix(n)
    t = _theta_array(n)
    return bool(np.array_equal(K.T @ t, t @ K))


def lambda_matrix(n: int) -> np.ndarray:
    """Entry ``(v, w)`` is ``lambda(v, w)``, the coefficient of ``F_w`` in ``S(F_v)``."""
    perms, index, _, _ = _enumeration(n)
    out = np.zeros((len(perms), len(perms)), dtype=np.int64)
    for i, v in enumerate(perms):
        for w, c in antipode_f(v).as_dict().items():
            out[i, index[w]] = c
    return out


def lambda_symmetry(n: int) -> bool:
    """``lambda(u, v^-1) = lambda(v, u^-1)`` for all ``u, v`` in ``S_n``."""
    perms, index, _, _ = _enumeration(n)
    inv = np.array([index[inverse(u)] for u in perms])
    lam = lambda_matrix(n)
    # lam[:, inv][u, v] = lambda(u, v^-1)
    a = lam[:, inv]
    return bool(np.array_equal(a, a.T))


def lambda_symmetry_by_counts(n: int) -> bool:
    """The same symmetry as a balance of subset counts with ``Des(v u_S) ⊆ S`` and ``Des(u v_S) ⊆ S``."""
    perms = permutations(n)
    subs = subsets(n)
    for u in perms:
        for v in perms:
            left = right = 0
            for S in subs:
                a = descent_set(compose(v, projection(u, S))).issubset(S)
                b = descent_set(compose(u, projection(v, S))).issubset(S)
                odd = len(S) % 2 == 1
                left += (a and odd) + (b and not odd)
                right += (a and not odd) + (b and odd)
            if left != right:
                return False
    return True


# ---------------------------------------------------------------------------
# the induced map on quasi-symmetric functions


def phi_map(x: QSymExpansion, route: str = "table") -> QSymExpansion:
    """``F*_S -> sum_T d(S, T) F_T`` and ``M*_S -> sum_T b(S, T) M_T``.

    ``route="composite"`` evaluates the descent map, ``Theta`` and the
    transposed descent map one after another instead of reading the tables.
    """
    _require_dual(x, "phi_map")
    if route == "composite":
        return descent_map(theta_map(descent_map_dual(x)))
    if route != "table":
        raise InvalidInput(f"unknown route {route!r}")
    kind = "d" if x.basis == "F" else "b"

    def on(alpha: Composition) -> QSymExpansion:
        S = alpha.subset()
        arr = descent_pair_counts(S.n, kind)
        row = arr[S.mask]
        return QSymExpansion(x.basis, {T.composition(): int(row[T.mask]) for T in subsets(S.n)})

    return linear_map(x, on, QSymExpansion(x.basis))

