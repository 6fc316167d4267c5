"""The Hopf kernel of the descent map and the cocycles of the crossed product.

``gamma`` below is the coalgebra splitting ``M_S -> M_{zeta_S}`` of the
descent map.  Two independent formulas are provided for the cocycle on
primitive elements: the general convolution formula evaluated by machine and
the closed form through the structure constants ``alpha^w_{1_p, 1_q}``.
"""

from __future__ import annotations

from collections import defaultdict

from ..config import InvalidInput
from ..linear import PermExpansion, QSymExpansion
from ..perm_core import (
    Composition,
    Permutation,
    Subset,
    _as_perm,
    global_descent_set,
    identity,
    is_closed,
    permutations,
    zeta_pq,
)
from ..qsym_algebra import QM, m_coproduct as q_coproduct
from ..qsym_algebra import product as q_product
from ..qsym_algebra import splitting_Z
from ..ssym_algebra import M, antipode, m_coproduct
from ..ssym_algebra import product as s_product

__all__ = [
    "is_kernel_excluded",
    "hopf_kernel_basis",
    "kernel_dimension",
    "kernel_membership",
    "structure_constant_exceptions",
    "verify_structure_constants",
    "antipode_of_zeta_pq",
    "sigma_cocycle",
    "sigma_on_primitives",
    "sigma_alpha_formula",
    "lie_cocycle",
    "lie_cocycle_alpha",
    "lie_coherence_check",
]


def is_kernel_excluded(u) -> bool:
    """True when ``u`` ends with ``1 2 ... (n - k)`` for some ``0 <= k < n``."""
    u = _as_perm(u)
    n = len(u)
    return any(all(u[k + i - 1] == i for i in range(1, n - k + 1)) for k in range(n))


def hopf_kernel_basis(n: int) -> list[Permutation]:
    return [u for u in permutations(n) if not is_kernel_excluded(u)]


def kernel_dimension(n: int) -> int:
    """``n! - sum_{k < n} k!``."""
    from math import factorial

    return factorial(n) - sum(factorial(k) for k in range(n))


def kernel_membership(u) -> bool:
    """``(id ⊗ D) Delta(M_u) = M_u ⊗ 1``, with ``D`` read off closed right factors."""
    u = _as_perm(u)
    acc: dict = defaultdict(int)
    for (a, b), c in m_coproduct(u).items():
        if is_closed(b):
            acc[(a, global_descent_set(b).composition())] += c
    acc = {k: v for k, v in acc.items() if v}
    return acc == {(u, Composition(())): 1}


# ---------------------------------------------------------------------------
# structure constants of M_{1_p} M_{1_q}


def structure_constant_exceptions(p: int, q: int) -> dict[Permutation, int]:
    """Expected nonzero ``alpha^w_{1_p,1_q}`` over closed ``w``."""
    if p == q:
        return {identity(p + q): 1, zeta_pq(p, p): 2}
    return {identity(p + q): 1, zeta_pq(p, q): 1, zeta_pq(q, p): 1}


def verify_structure_constants(p: int, q: int) -> bool:
    prod = s_product(M(identity(p)), M(identity(q)))
    closed = {w: c for w, c in prod.items() if is_closed(w)}
    return closed == structure_constant_exceptions(p, q)


def antipode_of_zeta_pq(p: int, q: int) -> bool:
    """``S(M_{zeta_{p,q}}) = M_{1_p} M_{1_q} - M_{zeta_{p,q}}``."""
    lhs = antipode(M(zeta_pq(p, q)))
    rhs = s_product(M(identity(p)), M(identity(q))) - M(zeta_pq(p, q))
    return lhs == rhs


# ---------------------------------------------------------------------------
# cocycles


def _gamma(x: QSymExpansion) -> PermExpansion:
    return splitting_Z(x)


def sigma_cocycle(S, T) -> PermExpansion:
    """``sigma(k, k') = sum gamma(k_1) gamma(k'_1) S gamma(k_2 k'_2)`` on ``k = M_S``, ``k' = M_T``."""
    a = S.composition() if isinstance(S, Subset) else Composition(S)
    b = T.composition() if isinstance(T, Subset) else Composition(T)
    out = PermExpansion("M")
    for (a1, a2), ca in q_coproduct(a).items():
        for (b1, b2), cb in q_coproduct(b).items():
            left = s_product(_gamma(QM(a1)), _gamma(QM(b1)))
            right = antipode(_gamma(q_product(QM(a2), QM(b2))))
            out = out + (ca * cb) * s_product(left, right)
    return out


def _check_pq(p: int, q: int) -> None:
    if p < 1 or q < 1:
        raise InvalidInput("primitive cocycle values need p, q >= 1")


def sigma_on_primitives(p: int, q: int) -> PermExpansion:
    """``S gamma(k k') - gamma(k') gamma(k)`` with ``k = M_(p)``, ``k' = M_(q)``."""
    _check_pq(p, q)
    k, k2 = QM((p,)), QM((q,))
    return antipode(_gamma(q_product(k, k2))) - s_product(_gamma(k2), _gamma(k))


def sigma_alpha_formula(p: int, q: int, transpose: bool = False) -> PermExpansion:
    """``sum alpha^w_{1_p,1_q} M_w`` over ``w`` outside ``{zeta_{p,q}, zeta_{q,p}, 1_{p+q}}``.

    ``transpose=True`` uses ``alpha^w_{1_q,1_p}`` instead; the two differ when ``p != q``.
    """
    _check_pq(p, q)
    a, b = (q, p) if transpose else (p, q)
    prod = s_product(M(identity(a)), M(identity(b)))
    skip = {zeta_pq(p, q), zeta_pq(q, p), identity(p + q)}
    return PermExpansion("M", {w: c for w, c in prod.items() if w not in skip})


def lie_cocycle(p: int, q: int) -> PermExpansion:
    """``sigma(k, k') - sigma(k', k)``."""
    return sigma_on_primitives(p, q) - sigma_on_primitives(q, p)


def lie_cocycle_alpha(p: int, q: int, transpose: bool = False) -> PermExpansion:
    """``sum (alpha^w_{1_p,1_q} - alpha^w_{1_q,1_p}) M_w``, or its negative when transposed."""
    _check_pq(p, q)
    d = s_product(M(identity(p)), M(identity(q))) - s_product(M(identity(q)), M(identity(p)))
    return -d if transpose else d


def _bracket(x: PermExpansion, y: PermExpansion) -> PermExpansion:
    return s_product(x, y) - s_product(y, x)


def lie_coherence_check(max_degree: int) -> bool:
    """Both compatibility identities of the Lie cocycle on the primitive generators.

    Primitives of quasi-symmetric functions commute, so the bracket terms on
    the quotient side vanish and the identities reduce to
    ``[g_k, [g_k', a]] - [g_k', [g_k, a]] = [sigma~(k, k'), a]`` and the cyclic
    sum ``k . sigma~(k', k'') - k' . sigma~(k, k'') + k'' . sigma~(k, k') = 0``.
    Here ``a`` runs over the kernel primitives ``M_u`` (no global descent,
    ``u`` not an identity) and every degree stays at most ``max_degree``.
    """
    g = {p: M(identity(p)) for p in range(1, max_degree + 1)}
    tilde = {}
    for p in range(1, max_degree):
        for q in range(1, max_degree - p + 1):
            tilde[(p, q)] = lie_cocycle(p, q)
    for p in range(1, max_degree):
        for q in range(1, max_degree - p):
            for r in range(1, max_degree - p - q + 1):
                for u in permutations(r):
                    if global_descent_set(u).members or u == identity(r):
                        continue
                    a = M(u)
                    lhs = _bracket(g[p], _bracket(g[q], a)) - _bracket(g[q], _bracket(g[p], a))
                    if lhs != _bracket(tilde[(p, q)], a):
                        return False
                x = (
                    _bracket(g[p], tilde[(q, r)])
                    - _bracket(g[q], tilde[(p, r)])
                    + _bracket(g[r], tilde[(p, q)])
                )
                if x:
                    return False
    return True
