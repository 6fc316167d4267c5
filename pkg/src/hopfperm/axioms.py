"""Hopf algebra axioms checked on basis elements, for either algebra and either basis."""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable

from .linear import PermExpansion, QSymExpansion
from .perm_core import Composition, permutations, subsets
from . import qsym_algebra as qsym
from . import ssym_algebra as ssym

__all__ = ["HopfOps", "ssym_ops", "qsym_ops", "axiom_failures"]


@dataclass(frozen=True)
class HopfOps:
    name: str
    basis: str
    elements: Callable[[int], list]
    product: Callable
    coproduct: Callable
    counit: Callable
    antipode: Callable
    tensor_product: Callable
    unit: Callable


def ssym_ops(basis: str) -> HopfOps:
    return HopfOps(
        "ssym",
        basis,
        lambda n: [PermExpansion(basis, {u: 1}) for u in permutations(n)],
        ssym.product,
        ssym.coproduct,
        ssym.counit,
        ssym.antipode,
        ssym.tensor_product,
        lambda: ssym.unit(basis),
    )


def qsym_ops(basis: str) -> HopfOps:
    def elements(n: int) -> list:
        if n == 0:
            return [QSymExpansion(basis, {Composition(()): 1})]
        return [QSymExpansion(basis, {S.composition(): 1}) for S in subsets(n)]

    return HopfOps(
        "qsym",
        basis,
        elements,
        qsym.product,
        qsym.coproduct,
        qsym.counit,
        qsym.antipode,
        qsym.tensor_product,
        lambda: qsym.qunit(basis),
    )


def _single(ops: HopfOps, key):
    cls = PermExpansion if ops.name == "ssym" else QSymExpansion
    return cls(ops.basis, {key: 1})


def _coassoc(ops: HopfOps, x) -> bool:
    left: dict = defaultdict(int)
    right: dict = defaultdict(int)
    for (a, b), c in ops.coproduct(x).items():
        for (a1, a2), c1 in ops.coproduct(_single(ops, a)).items():
            left[(a1, a2, b)] += c * c1
        for (b1, b2), c2 in ops.coproduct(_single(ops, b)).items():
            right[(a, b1, b2)] += c * c2
    return {k: v for k, v in left.items() if v} == {k: v for k, v in right.items() if v}


def _counit(ops: HopfOps, x) -> bool:
    left: dict = defaultdict(int)
    right: dict = defaultdict(int)
    for (a, b), c in ops.coproduct(x).items():
        left[b] += c * ops.counit(_single(ops, a))
        right[a] += c * ops.counit(_single(ops, b))
    cls = type(x)
    return cls(ops.basis, left) == x and cls(ops.basis, right) == x


def _antipode(ops: HopfOps, x) -> bool:
    zero = ops.unit().zero()
    left, right = zero, zero
    for (a, b), c in ops.coproduct(x).items():
        A, B = _single(ops, a), _single(ops, b)
        left = left + c * ops.product(ops.antipode(A), B)
        right = right + c * ops.product(A, ops.antipode(B))
    expected = ops.counit(x) * ops.unit()
    return left == expected and right == expected


def axiom_failures(ops: HopfOps, max_degree: int) -> dict[str, int]:
    """Number of failing instances of each axiom over basis elements up to ``max_degree``.

    Products range over pairs and triples whose degrees sum to at most ``max_degree``.
    """
    fails = {
        "associativity": 0,
        "unit": 0,
        "coassociativity": 0,
        "counit": 0,
        "bialgebra": 0,
        "antipode": 0,
    }
    els = {n: ops.elements(n) for n in range(max_degree + 1)}
    one = ops.unit()
    for n in range(max_degree + 1):
        for x in els[n]:
            if ops.product(one, x) != x or ops.product(x, one) != x:
                fails["unit"] += 1
            if not _coassoc(ops, x):
                fails["coassociativity"] += 1
            if not _counit(ops, x):
                fails["counit"] += 1
            if not _antipode(ops, x):
                fails["antipode"] += 1
    for p, q in itertools.product(range(1, max_degree + 1), repeat=2):
        if p + q > max_degree:
            continue
        for x in els[p]:
            for y in els[q]:
                lhs = ops.coproduct(ops.product(x, y))
                rhs = ops.tensor_product(ops.coproduct(x), ops.coproduct(y))
                if lhs != rhs:
                    fails["bialgebra"] += 1
    for p, q, r in itertools.product(range(1, max_degree + 1), repeat=3):
        if p + q + r > max_degree:
            continue
        for x in els[p]:
            for y in els[q]:
                xy = ops.product(x, y)
                for z in els[r]:
                    if ops.product(xy, z) != ops.product(x, ops.product(y, z)):
                        fails["associativity"] += 1
    return fails

