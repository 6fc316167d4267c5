"""Named invariant suites, run up to a degree bound.

Each check takes the bound ``n`` and returns ``True`` on success.  Checks that
grow quickly clamp the bound themselves so that ``--max-degree 5`` stays fast.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from typing import Callable

from . import perm_core as pc
from . import qsym_algebra as qs
from . import ssym_algebra as ss
from . import weak_order as wo
from .axioms import axiom_failures, qsym_ops, ssym_ops
from .linear import PermExpansion, QSymExpansion
from .structure_lab import cofree, crossed, descent_pairs, duality

__all__ = ["Check", "CheckResult", "SUITES", "run_suite"]


@dataclass(frozen=True)
class Check:
    name: str
    fn: Callable[[int], bool]


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    seconds: float
    error: str = ""


def _upto(n: int, cap: int, start: int = 0) -> range:
    return range(start, min(n, cap) + 1)


# ---------------------------------------------------------------------------
# permutations


def _coset_roundtrip(n: int) -> bool:
    for m in _upto(n, 5):
        for S in pc.subsets(m):
            for w in pc.permutations(m):
                z, blocks = pc.coset_decompose(w, S)
                if pc.compose(z, pc.direct_sum(*blocks)) != w:
                    return False
    return True


def _closed_is_zeta(n: int) -> bool:
    for m in _upto(n, 6):
        closed = {u for u in pc.permutations(m) if pc.is_closed(u)}
        if closed != {pc.zeta_of_subset(m, S) for S in pc.subsets(m)}:
            return False
    return True


def _zeta_is_max(n: int) -> bool:
    for m in _upto(n, 5):
        for S in pc.subsets(m):
            z = pc.zeta_of_subset(m, S)
            for u in pc.permutations(m):
                if pc.descent_set(u).issubset(S) and not wo.leq(u, z):
                    return False
                if S.issubset(pc.global_descent_set(u)) and not wo.leq(z, u):
                    return False
    return True


def _reverse_conjugate(n: int) -> bool:
    for m in _upto(n, 6):
        w = pc.longest(m)
        for u in pc.permutations(m):
            if pc.descent_set(pc.compose(pc.compose(w, u), w)) != pc.descent_set(u).reversed():
                return False
    return True


PERM_CORE = [
    Check("coset decomposition round trip", _coset_roundtrip),
    Check("closed permutations are the zeta_S", _closed_is_zeta),
    Check("zeta_S is max of Des ⊆ S and min of GDes ⊇ S", _zeta_is_max),
    Check("conjugating by the longest element reverses descents", _reverse_conjugate),
]


# ---------------------------------------------------------------------------
# weak order


def _lattice_brute(n: int) -> bool:
    for m in _upto(n, 4):
        perms = pc.permutations(m)
        for u in perms:
            for v in perms:
                ub = [x for x in perms if wo.leq(u, x) and wo.leq(v, x)]
                lb = [x for x in perms if wo.leq(x, u) and wo.leq(x, v)]
                j, mt = wo.join(u, v), wo.meet(u, v)
                if j not in ub or not all(wo.leq(j, x) for x in ub):
                    return False
                if mt not in lb or not all(wo.leq(x, mt) for x in lb):
                    return False
                if wo.meet_by_chains(u, v) != mt:
                    return False
    return True


def _mobius_values(n: int) -> bool:
    for m in _upto(n, 6):
        for u in pc.permutations(m):
            if any(c not in (-1, 0, 1) for c in wo.mobius_row(u).values()):
                return False
    return True


def _mobius_inversion(n: int) -> bool:
    for m in _upto(n, 4):
        for u in pc.permutations(m):
            row = wo.mobius_row(u)
            for v in wo.upset(u):
                s = sum(row.get(x, 0) for x in wo.interval(u, v))
                if s != (1 if u == v else 0):
                    return False
    return True


def _downsets_are_lower(n: int) -> bool:
    return all(wo.downset(u).is_lower_set() for m in _upto(n, 4) for u in pc.permutations(m))


def _shuffle_intervals(n: int) -> bool:
    return all(wo.is_interval_of_shuffles(m, S) for m in _upto(n, 6) for S in pc.subsets(m))


def _gdes_monotone(n: int) -> bool:
    return all(cofree.gdes_order_preserving(m) for m in _upto(n, 6))


WEAK_ORDER = [
    Check("join and meet are least upper / greatest lower bounds", _lattice_brute),
    Check("Möbius values lie in {-1, 0, 1}", _mobius_values),
    Check("Möbius function inverts the zeta function", _mobius_inversion),
    Check("down-sets are lower sets", _downsets_are_lower),
    Check("Sh(S) is an interval", _shuffle_intervals),
    Check("GDes is order preserving", _gdes_monotone),
]


# ---------------------------------------------------------------------------
# permutation algebra


def _ssym_axioms(basis: str) -> Callable[[int], bool]:
    return lambda n: not any(axiom_failures(ssym_ops(basis), min(n, 5)).values())


def _basis_roundtrip(n: int) -> bool:
    for m in _upto(n, 6):
        for u in pc.permutations(m):
            if ss.f_to_m(ss.m_to_f(ss.M(u))) != ss.M(u):
                return False
    return True


def _m_product_routes(n: int) -> bool:
    for p in _upto(n, 4, 1):
        for q in range(1, min(n, 5) - p + 1):
            for u in pc.permutations(p):
                for v in pc.permutations(q):
                    direct = ss.m_product(u, v)
                    via_f = ss.f_to_m(ss.product(ss.m_to_f(ss.M(u)), ss.m_to_f(ss.M(v))))
                    if direct != via_f:
                        return False
    return True


def _three_antipodes(n: int) -> bool:
    for m in _upto(n, 5):
        for u in pc.permutations(m):
            f = ss.antipode(ss.F(u))
            if ss.takeuchi_antipode(ss.F(u)) != f:
                return False
            if ss.m_to_f(ss.antipode(ss.f_to_m(ss.F(u)))) != f:
                return False
    return True


def _pi_powers(n: int) -> bool:
    for m in _upto(n, 4, 1):
        for u in pc.permutations(m):
            for k in range(m + 1):
                for basis, ctor in (("F", ss.F), ("M", ss.M)):
                    if ss.pi_power(ctor(u), k) != ss.pi_power_closed(u, k, basis):
                        return False
    return True


def _higher_product(n: int) -> bool:
    for m in _upto(n, 5, 3):
        for sizes in ((1,) * m, (1, m - 2, 1)):
            blocks = [pc.identity(s) for s in sizes]
            for basis, ctor in (("F", ss.F), ("M", ss.M)):
                step = ctor(blocks[0])
                for b in blocks[1:]:
                    step = ss.product(step, ctor(b))
                if ss.higher_product(blocks, basis) != step:
                    return False
    return True


SSYM = [
    Check("Hopf axioms, F basis", _ssym_axioms("F")),
    Check("Hopf axioms, M basis", _ssym_axioms("M")),
    Check("F/M conversion round trip", _basis_roundtrip),
    Check("monomial product by witnesses equals product through F", _m_product_routes),
    Check("Takeuchi, F and M antipodes agree", _three_antipodes),
    Check("convolution powers of pi: closed forms", _pi_powers),
    Check("iterated product in one step", _higher_product),
]


# ---------------------------------------------------------------------------
# quasi-symmetric functions


def _qsym_axioms(basis: str) -> Callable[[int], bool]:
    return lambda n: not any(axiom_failures(qsym_ops(basis), min(n, 6)).values())


def _descent_morphism(n: int) -> bool:
    top = min(n, 5)
    for basis, ctor in (("F", ss.F), ("M", ss.M)):
        for p in range(0, top + 1):
            for q in range(0, top - p + 1):
                for u in pc.permutations(p):
                    for v in pc.permutations(q):
                        x, y = ctor(u), ctor(v)
                        if qs.descent_map(ss.product(x, y)) != qs.product(qs.descent_map(x), qs.descent_map(y)):
                            return False
        for m in range(top + 1):
            for u in pc.permutations(m):
                x = ctor(u)
                lhs = Counter()
                for (a, b), c in ss.coproduct(x).items():
                    da = qs.descent_map(PermExpansion(basis, {a: 1}))
                    db = qs.descent_map(PermExpansion(basis, {b: 1}))
                    for ka, ca in da.items():
                        for kb, cb in db.items():
                            lhs[(ka, kb)] += c * ca * cb
                rhs = qs.coproduct(qs.descent_map(x)).as_dict()
                if {k: v for k, v in lhs.items() if v} != rhs:
                    return False
    return True


def _splitting(n: int) -> bool:
    for m in _upto(n, 6):
        for S in pc.subsets(m):
            x = qs.QM(S)
            if qs.descent_map(qs.splitting_Z(x)) != x:
                return False
            z = qs.splitting_Z(x)
            lhs = {(a, b): c for (a, b), c in ss.coproduct(z).items()}
            rhs = {}
            for (a, b), c in qs.coproduct(x).items():
                za = next(iter(qs.splitting_Z(qs.QM(a)).keys()))
                zb = next(iter(qs.splitting_Z(qs.QM(b)).keys()))
                rhs[(za, zb)] = c
            if lhs != rhs:
                return False
    return True


def _cube_coefficients(n: int) -> bool:
    top = min(n, 5)
    for p in range(1, top):
        for q in range(1, top - p + 1):
            for S in pc.subsets(p):
                for T in pc.subsets(q):
                    prod = qs.m_quasi_shuffle(S.composition(), T.composition())
                    for R in pc.subsets(p + q):
                        if prod.coefficient(R.composition()) != qs.cube_product_coefficient(S, T, R):
                            return False
    return True


def _r_zeta_routes(n: int) -> bool:
    for m in _upto(n, 5):
        for p in range(m + 1):
            for z in pc.shuffles(p, m - p):
                for S in pc.subsets(p):
                    for T in pc.subsets(m - p):
                        if qs.r_zeta(S, T, z) != qs.r_zeta_direct(S, T, z):
                            return False
    return True


def _faces(n: int) -> bool:
    return all(qs.face_uniqueness_check(m) for m in _upto(n, 6, 1))


def _mobius_fiber(n: int) -> bool:
    for m in _upto(n, 5, 1):
        for u in pc.permutations(m):
            for S in pc.subsets(m):
                got = qs.mobius_descent_fiber(u, S)
                if pc.is_closed(u):
                    D = pc.descent_set(u)
                    want = (-1) ** (len(S) - len(D)) if D.issubset(S) else 0
                else:
                    want = 0
                if got != want:
                    return False
    return True


def _closed_halves(n: int) -> bool:
    for m in _upto(n, 6, 1):
        for u in pc.permutations(m):
            for p in pc.global_descent_set(u).members:
                left = pc.standardize(u[:p])
                right = pc.standardize(u[p:])
                if pc.is_closed(u) != (pc.is_closed(left) and pc.is_closed(right)):
                    return False
    return True


def _polynomial_product(n: int) -> bool:
    top = min(n, 4)
    for p in range(1, top):
        for q in range(1, top - p + 1):
            for S in pc.subsets(p):
                for T in pc.subsets(q):
                    a, b = qs.QM(S), qs.QM(T)
                    pa, pb = qs.expand_polynomial(a, 3), qs.expand_polynomial(b, 3)
                    prod = Counter()
                    for ea, ca in pa.items():
                        for eb, cb in pb.items():
                            prod[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
                    if {k: v for k, v in prod.items() if v} != qs.expand_polynomial(a * b, 3):
                        return False
    return True


QSYM = [
    Check("Hopf axioms, M basis", _qsym_axioms("M")),
    Check("Hopf axioms, F basis", _qsym_axioms("F")),
    Check("descent map is a Hopf morphism", _descent_morphism),
    Check("splitting is a coalgebra section", _splitting),
    Check("cube faces count the monomial product", _cube_coefficients),
    Check("r_zeta: formula equals descent set", _r_zeta_routes),
    Check("faces of distinct splittings are distinct", _faces),
    Check("Möbius sums over descent fibres", _mobius_fiber),
    Check("closedness splits at global descents", _closed_halves),
    Check("polynomial truncation is multiplicative", _polynomial_product),
]


# ---------------------------------------------------------------------------
# duality


def _theta_symmetric_invertible(n: int) -> bool:
    for m in _upto(n, 5):
        t = duality.theta_matrix(m)
        if not (t == t.T).all() or duality.theta_determinant(m) == 0:
            return False
    return True


def _theta_recursion(n: int) -> bool:
    top = min(n, 5)
    return all(duality.verify_theta_recursion(p, q) for p in range(top + 1) for q in range(top - p + 1))


def _theta_routes(n: int) -> bool:
    for m in _upto(n, 4):
        for u in pc.permutations(m):
            x = PermExpansion("M", {u: 1}, dual=True)
            if duality.theta_map(x, "F") != duality.theta_map(duality.dual_to_basis(x, "F"), "F"):
                return False
    return True


def _theta_algebra_map(n: int) -> bool:
    top = min(n, 4)
    for basis in ("F", "M"):
        for p in range(1, top):
            for q in range(1, top - p + 1):
                for u in pc.permutations(p):
                    for v in pc.permutations(q):
                        a = PermExpansion(basis, {u: 1}, dual=True)
                        b = PermExpansion(basis, {v: 1}, dual=True)
                        lhs = duality.theta_map(duality.dual_product(a, b))
                        rhs = ss.product(duality.theta_map(a), duality.theta_map(b))
                        if lhs != rhs:
                            return False
    return True


def _kappa_theta(n: int) -> bool:
    return all(duality.verify_kappa_theta(m) for m in _upto(n, 5))


def _lambda(n: int) -> bool:
    top = min(n, 5)
    return all(duality.lambda_symmetry(m) for m in range(top + 1)) and all(
        duality.lambda_symmetry_by_counts(m) for m in range(min(top, 4) + 1)
    )


def _phi(n: int) -> bool:
    for m in _upto(n, 5, 1):
        for S in pc.subsets(m):
            for basis in ("F", "M"):
                x = QSymExpansion(basis, {S.composition(): 1}, dual=True)
                if duality.phi_map(x) != duality.phi_map(x, "composite"):
                    return False
        top = QSymExpansion("M", {(m,): 1}, dual=True)
        if duality.phi_map(top) != qs.f_to_m(qs.QF((m,))):
            return False
    return True


def _gessel(n: int) -> bool:
    return all(descent_pairs.verify_gessel_identities(m) for m in _upto(n, 6, 1))


DUALITY = [
    Check("theta is symmetric and invertible", _theta_symmetric_invertible),
    Check("theta conjugates alpha^w to the dual product", _theta_recursion),
    Check("Theta agrees on both dual bases", _theta_routes),
    Check("Theta is multiplicative", _theta_algebra_map),
    Check("antipode matrix commutes with theta", _kappa_theta),
    Check("lambda symmetry", _lambda),
    Check("Phi from tables equals the composite", _phi),
    Check("descent-pair symmetries", _gessel),
]


# ---------------------------------------------------------------------------
# cofreeness


def _cofree_roundtrip(n: int) -> bool:
    for m in _upto(n, 6):
        for u in pc.permutations(m):
            x = ss.M(u)
            t = cofree.cofree_phi_hat(x)
            if cofree.cofree_psi(t) != x or cofree.cofree_phi_hat(cofree.cofree_psi(t)) != t:
                return False
    return True


def _primitives(n: int) -> bool:
    for m in _upto(n, 5, 1):
        for u in cofree.primitives(m):
            terms = set(ss.m_coproduct(u).keys())
            if terms != {(pc.Permutation(()), u), (u, pc.Permutation(()))}:
                return False
    return True


def _levels(n: int) -> bool:
    return all(cofree.coproduct_respects_levels(m) for m in _upto(n, 5))


def _g_series(n: int) -> bool:
    top = max(min(n, 7), 1)
    g1 = cofree.g_series(1, top)
    if cofree.g1_by_reciprocal(top) != g1 or cofree.g1_by_determinant(top).coefficients != g1.coefficients:
        return False
    return all(
        cofree.series_power(g1, k).coefficients == cofree.g_series(k, top).coefficients
        for k in range(2, 4)
    )


COFREE = [
    Check("phi-hat and psi are inverse", _cofree_roundtrip),
    Check("global-descent-free monomials are primitive", _primitives),
    Check("coproduct respects the coradical grading", _levels),
    Check("G_k: counts, determinant, reciprocal and powers agree", _g_series),
]


# ---------------------------------------------------------------------------
# crossed product


def _kernel(n: int) -> bool:
    for m in _upto(n, 7, 1):
        if len(crossed.hopf_kernel_basis(m)) != crossed.kernel_dimension(m):
            return False
    return all(crossed.kernel_membership(u) for m in _upto(n, 5, 1) for u in crossed.hopf_kernel_basis(m))


def _structure_constants(n: int) -> bool:
    top = min(n, 6)
    return all(crossed.verify_structure_constants(p, q) for p in range(1, top) for q in range(1, top - p + 1))


def _zeta_antipode(n: int) -> bool:
    top = min(n, 5)
    return all(crossed.antipode_of_zeta_pq(p, q) for p in range(1, top) for q in range(1, top - p + 1))


def _sigma_routes(n: int) -> bool:
    top = min(n, 5)
    for p in range(1, top):
        for q in range(1, top - p + 1):
            s = crossed.sigma_on_primitives(p, q)
            if s != crossed.sigma_alpha_formula(p, q):
                return False
            if s != crossed.sigma_cocycle(pc.Subset((), p), pc.Subset((), q)):
                return False
            if crossed.lie_cocycle(p, q) != crossed.lie_cocycle_alpha(p, q):
                return False
    return True


CROSSED = [
    Check("Hopf kernel: dimension and membership", _kernel),
    Check("structure constants of M_1p M_1q on closed w", _structure_constants),
    Check("antipode of M_zeta_pq", _zeta_antipode),
    Check("cocycle on primitives: three routes", _sigma_routes),
]


SUITES: dict[str, list[Check]] = {
    "perm_core": PERM_CORE,
    "weak_order": WEAK_ORDER,
    "ssym": SSYM,
    "qsym": QSYM,
    "duality": DUALITY,
    "cofree": COFREE,
    "crossed": CROSSED,
}


def run_suite(name: str, max_degree: int) -> list[CheckResult]:
    """Run one suite (or ``"all"``); exceptions count as failures."""
    names = list(SUITES) if name == "all" else [name]
    out = []
    for suite in names:
        if suite not in SUITES:
            raise KeyError(suite)
        for check in SUITES[suite]:
            t0 = time.perf_counter()
            try:
                ok, err = bool(check.fn(max_degree)), ""
            except Exception as exc:  # a crash is a failed check, reported with its message
                ok, err = False, f"{type(exc).__name__}: {exc}"
            out.append(CheckResult(suite, check.name, ok, time.perf_counter() - t0, err))
    return out
