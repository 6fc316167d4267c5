"""Cofreeness of the permutation coalgebra and the global-descent generating series.

Cutting ``u`` at its global descents and standardizing the pieces identifies
``M_u`` with a tensor of primitive monomials; ``cofree_psi`` glues such a
tensor back.  ``G_k(t)`` counts permutations with exactly ``k - 1`` global
descents, so ``G_1`` is the Hilbert series of the primitives.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from ..config import InvalidInput, check_degree
from ..linear import PermExpansion, TensorExpansion
from ..perm_core import (
    Permutation,
    _as_perm,
    _std,
    augmented_global_descents,
    compose,
    direct_sum,
    global_descent_set,
    permutations,
    zeta_of_subset,
)
from ..ssym_algebra import m_coproduct
from ..weak_order import leq

__all__ = [
    "primitives",
    "coradical_level",
    "global_descent_blocks",
    "cofree_phi_hat",
    "cofree_phi_hat_graded",
    "cofree_psi",
    "Series",
    "g_series",
    "g1_by_determinant",
    "primitive_dim_det",
    "g1_by_reciprocal",
    "series_power",
    "coproduct_respects_levels",
    "gdes_order_preserving",
]


def primitives(n: int) -> list[Permutation]:
    """Permutations with no global descent; their monomials span the primitives."""
    return [u for u in permutations(n) if not global_descent_set(u).members]


def coradical_level(x: PermExpansion) -> int:
    """``1 + max #GDes`` over the support of a monomial expansion; scalars sit at level 0."""
    if x.basis != "M" or x.dual:
        raise InvalidInput("coradical levels are read off the monomial basis")
    level = 0
    for u in x.keys():
        if len(u):
            level = max(level, 1 + len(global_descent_set(u)))
    return level


def global_descent_blocks(u) -> tuple[Permutation, ...]:
    """Standardized pieces of ``u`` between consecutive global descents."""
    u = _as_perm(u)
    if not u:
        return ()
    cuts = augmented_global_descents(u)
    return tuple(Permutation.trusted(_std(u[a:b])) for a, b in zip(cuts, cuts[1:]))


def cofree_phi_hat_graded(x: PermExpansion) -> dict[int, TensorExpansion]:
    """``M_u -> M_{b_1} ⊗ ... ⊗ M_{b_k}``, grouped by tensor length ``k``."""
    if x.basis != "M" or x.dual:
        raise InvalidInput("cofree_phi_hat acts on the monomial basis")
    groups: dict[int, list] = {}
    for u, c in x.items():
        blocks = global_descent_blocks(u) or (Permutation(()),)
        groups.setdefault(len(blocks), []).append((blocks, c))
    return {k: TensorExpansion("M", k, terms) for k, terms in sorted(groups.items())}


def cofree_phi_hat(x: PermExpansion) -> TensorExpansion:
    """Single-length version of :func:`cofree_phi_hat_graded`."""
    graded = cofree_phi_hat_graded(x)
    if len(graded) != 1:
        raise InvalidInput("support mixes global-descent counts; use cofree_phi_hat_graded")
    return next(iter(graded.values()))


def cofree_psi(t: TensorExpansion) -> PermExpansion:
    """``M_{v_1} ⊗ ... ⊗ M_{v_k} -> M_{zeta_T (v_1 x ... x v_k)}`` with ``T`` the block boundaries."""
    if t.basis != "M" or t.algebra != "ssym" or t.dual:
        raise InvalidInput("cofree_psi expects a monomial tensor over permutations")
    acc: dict = {}
    for blocks, c in t.items():
        nonempty = [b for b in blocks if len(b)]
        if len(nonempty) != len(blocks) and not (len(blocks) == 1):
            raise InvalidInput("tensor factors of positive length must be nonempty")
        for b in nonempty:
            if global_descent_set(b).members:
                raise InvalidInput(f"block {b} has a global descent")
        n = sum(len(b) for b in nonempty)
        cuts, s = [], 0
        for b in nonempty[:-1]:
            s += len(b)
            cuts.append(s)
        w = compose(zeta_of_subset(n, cuts), direct_sum(*nonempty)) if nonempty else Permutation(())
        acc[w] = acc.get(w, 0) + c
    return PermExpansion("M", acc)


# ---------------------------------------------------------------------------
# generating series


@dataclass(frozen=True)
class Series:
    """Truncated power series; ``coefficients[i]`` is the coefficient of ``t^i``."""

    name: str
    coefficients: tuple[int, ...]

    @property
    def max_degree(self) -> int:
        return len(self.coefficients) - 1

    def valuation(self) -> int:
        return next((i for i, c in enumerate(self.coefficients) if c), len(self.coefficients))

    def leading(self, terms: int) -> list[int]:
        """``terms`` coefficients starting at the lowest nonzero degree."""
        v = self.valuation()
        return list(self.coefficients[v:v + terms])

    def truncate(self, degree: int) -> "Series":
        return Series(self.name, self.coefficients[: degree + 1])


def _gdes_histogram(n: int) -> dict[int, int]:
    check_degree(n)
    hist: dict[int, int] = {}
    for u in permutations(n):
        k = len(global_descent_set(u))
        hist[k] = hist.get(k, 0) + 1
    return hist


def g_series(k: int, max_degree: int) -> Series:
    """``G_k`` by counting permutations with exactly ``k - 1`` global descents."""
    if k < 1:
        raise InvalidInput("G_k is defined for k >= 1")
    coeffs = [0]
    for n in range(1, max_degree + 1):
        coeffs.append(_gdes_histogram(n).get(k - 1, 0))
    return Series(f"G{k}", tuple(coeffs))


def primitive_dim_det(n: int) -> int:
    """``(-1)^(n-1) det`` of the Hessenberg matrix with ``(j - i + 1)!`` on and above the subdiagonal."""
    if n < 1:
        raise InvalidInput("n must be positive")
    rows = [
        [ZZ(factorial(j - i + 1)) if j >= i - 1 else ZZ(0) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    det = DomainMatrix(rows, (n, n), ZZ).det()
    return int((-1) ** (n - 1) * det)


def g1_by_determinant(max_degree: int) -> Series:
    return Series("G1", (0,) + tuple(primitive_dim_det(n) for n in range(1, max_degree + 1)))


def _mul(a: list[int], b: list[int], degree: int) -> list[int]:
    out = [0] * (degree + 1)
    for i, x in enumerate(a[: degree + 1]):
        if x:
            for j, y in enumerate(b[: degree + 1 - i]):
                out[i + j] += x * y
    return out


def g1_by_reciprocal(max_degree: int) -> Series:
    """``1 - 1 / sum n! t^n``, inverting the factorial series term by term."""
    f = [factorial(n) for n in range(max_degree + 1)]
    inv = [1] + [0] * max_degree
    for n in range(1, max_degree + 1):
        inv[n] = -sum(f[i] * inv[n - i] for i in range(1, n + 1))
    return Series("G1", tuple([1 - inv[0]] + [-c for c in inv[1:]]))


def series_power(s: Series, k: int) -> Series:
    degree = s.max_degree
    out = [1] + [0] * degree
    for _ in range(k):
        out = _mul(out, list(s.coefficients), degree)
    return Series(f"{s.name}^{k}", tuple(out))


# ---------------------------------------------------------------------------
# grading checks


def coproduct_respects_levels(n: int) -> bool:
    """Each term of ``Delta(M_u)`` has levels summing to the level of ``u``."""
    for u in permutations(n):
        k = coradical_level(PermExpansion("M", {u: 1}))
        for (a, b), _ in m_coproduct(u).items():
            la = coradical_level(PermExpansion("M", {a: 1}))
            lb = coradical_level(PermExpansion("M", {b: 1}))
            if la + lb != k:
                return False
    return True


def gdes_order_preserving(n: int) -> bool:
    """``u <= v`` implies ``GDes(u) ⊆ GDes(v)``."""
    perms = permutations(n)
    gd = {u: global_descent_set(u) for u in perms}
    return all(gd[u].issubset(gd[v]) for u in perms for v in perms if leq(u, v))
