"""Finitely supported integer linear combinations.

Three containers share one implementation:

* ``PermExpansion``: permutations in the F or M basis of the permutation algebra,
* ``QSymExpansion``: compositions in the F or M basis of quasi-symmetric functions,
* ``TensorExpansion``: tuples of either kind (a fixed arity).

Coefficients are Python ints; zero coefficients are never stored.  Iteration
is always in canonical order, by degree and then lexicographically.
"""

from __future__ import annotations

import operator
from collections.abc import Mapping
from typing import Callable, Iterable, Iterator

from .config import InvalidInput
from .perm_core import Composition, Permutation, Subset

__all__ = ["PermExpansion", "QSymExpansion", "TensorExpansion", "linear_map"]

BASES = ("F", "M")


def _coerce_int(c) -> int:
    try:
        return operator.index(c)
    except TypeError as exc:
        raise InvalidInput(f"coefficients must be integers, got {c!r}") from exc


def _composition_key(key) -> Composition:
    if isinstance(key, Composition):
        return key
    if isinstance(key, Subset):
        return key.composition()
    return Composition(key)


class _Linear:
    __slots__ = ("basis", "dual", "_terms")

    def __init__(self, basis: str, terms=(), dual: bool = False):
        if basis not in BASES:
            raise InvalidInput(f"unknown basis {basis!r}; expected one of {BASES}")
        self.basis = basis
        self.dual = bool(dual)
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            k = self._key(key)
            acc[k] = acc.get(k, 0) + _coerce_int(c)
        self._terms = {k: c for k, c in acc.items() if c}

    # subclasses provide _key (normalizer) and _sort_key
    def _key(self, key):
        raise NotImplementedError

    @staticmethod
    def _sort_key(key) -> tuple:
        raise NotImplementedError

    def _like(self, terms) -> "_Linear":
        out = object.__new__(type(self))
        out.basis, out.dual = self.basis, self.dual
        self._copy_extra(out)
        out._terms = {k: c for k, c in terms.items() if c}
        return out

    def _copy_extra(self, out) -> None:
        pass

    def _check(self, other) -> None:
        if type(other) is not type(self):
            raise InvalidInput(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.basis != self.basis or other.dual != self.dual:
            raise InvalidInput(
                f"basis mismatch: {self.basis}{'*' * self.dual} vs {other.basis}{'*' * other.dual}"
            )

    def items(self) -> list[tuple]:
        return sorted(self._terms.items(), key=lambda kv: self._sort_key(kv[0]))

    def keys(self) -> list:
        return [k for k, _ in self.items()]

    def support(self) -> set:
        return set(self._terms)

    def as_dict(self) -> dict:
        return dict(self._terms)

    def coefficient(self, key) -> int:
        return self._terms.get(self._key(key), 0)

    __getitem__ = coefficient

    def __iter__(self) -> Iterator:
        return iter(self.keys())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if type(other) is not type(self):
            return NotImplemented
        return (
            self.basis == other.basis
            and self.dual == other.dual
            and self._extra() == other._extra()
            and self._terms == other._terms
        )

    def _extra(self) -> tuple:
        return ()

    __hash__ = None  # mutable-looking value semantics; not hashable

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return self._like(acc)

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int):
        c = _coerce_int(c)
        return self._like({k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, int):
            return self.scale(c)
        return NotImplemented

    def zero(self):
        return self._like({})

    def map_keys(self, f: Callable) -> "_Linear":
        acc: dict = {}
        for k, c in self._terms.items():
            k2 = f(k)
            acc[k2] = acc.get(k2, 0) + c
        return self._like(acc)

    def __str__(self) -> str:
        from .textio import format_expansion

        return format_expansion(self)

    def __repr__(self) -> str:
        star = "*" if self.dual else ""
        return f"{type(self).__name__}<{self.basis}{star}>({self})"


class PermExpansion(_Linear):
    """Integer combination of permutations in the F or M basis (or their duals)."""

    __slots__ = ()

    def _key(self, key) -> Permutation:
        return key if isinstance(key, Permutation) else Permutation(key)

    @staticmethod
    def _sort_key(key) -> tuple:
        return (len(key), tuple(key))

    @classmethod
    def single(cls, basis: str, u, coeff: int = 1, dual: bool = False) -> "PermExpansion":
        return cls(basis, {u: coeff}, dual=dual)

    def degrees(self) -> list[int]:
        return sorted({len(k) for k in self._terms})

    def homogeneous(self, n: int) -> "PermExpansion":
        return self._like({k: c for k, c in self._terms.items() if len(k) == n})

    def max_degree(self) -> int:
        return max((len(k) for k in self._terms), default=0)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, PermExpansion):
            from .ssym_algebra import product

            return product(self, other)
        return NotImplemented


class QSymExpansion(_Linear):
    """Integer combination of compositions in the F or M basis (or their duals)."""

    __slots__ = ()

    def _key(self, key) -> Composition:
        return _composition_key(key)

    @staticmethod
    def _sort_key(key) -> tuple:
        return key.sort_key()

    @classmethod
    def single(cls, basis: str, alpha, coeff: int = 1, dual: bool = False) -> "QSymExpansion":
        return cls(basis, {alpha: coeff}, dual=dual)

    def degrees(self) -> list[int]:
        return sorted({k.total for k in self._terms})

    def homogeneous(self, n: int) -> "QSymExpansion":
        return self._like({k: c for k, c in self._terms.items() if k.total == n})

    def max_degree(self) -> int:
        return max((k.total for k in self._terms), default=0)

    def subset_items(self) -> list[tuple[Subset, int]]:
        return [(k.subset(), c) for k, c in self.items()]

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, QSymExpansion):
            from .qsym_algebra import product

            return product(self, other)
        return NotImplemented


class TensorExpansion(_Linear):
    """Integer combination of k-tuples of basis indices.

    ``algebra`` is ``"ssym"`` (tuples of permutations) or ``"qsym"``
    (tuples of compositions).  Degree-0 factors are the empty index.
    """

    __slots__ = ("arity", "algebra")

    def __init__(self, basis: str, arity: int, terms=(), dual: bool = False, algebra: str = "ssym"):
        if algebra not in ("ssym", "qsym"):
            raise InvalidInput(f"unknown algebra {algebra!r}")
        if arity < 1:
            raise InvalidInput("tensor arity must be at least 1")
        self.arity = arity
        self.algebra = algebra
        super().__init__(basis, terms, dual)

    def _copy_extra(self, out) -> None:
        out.arity = self.arity
        out.algebra = self.algebra

    def _extra(self) -> tuple:
        return (self.arity, self.algebra)

    def _check(self, other) -> None:
        super()._check(other)
        if other._extra() != self._extra():
            raise InvalidInput("tensor arity or algebra mismatch")

    def _key(self, key) -> tuple:
        key = tuple(key)
        if len(key) != self.arity:
            raise InvalidInput(f"expected a {self.arity}-tuple, got {key!r}")
        if self.algebra == "ssym":
            return tuple(k if isinstance(k, Permutation) else Permutation(k) for k in key)
        return tuple(_composition_key(k) for k in key)

    @staticmethod
    def _sort_key(key) -> tuple:
        if key and isinstance(key[0], Composition):
            return tuple(k.sort_key() for k in key)
        return tuple((len(k), tuple(k)) for k in key)

    def factor_type(self) -> type:
        return PermExpansion if self.algebra == "ssym" else QSymExpansion

    def __repr__(self) -> str:
        star = "*" if self.dual else ""
        return f"TensorExpansion<{self.algebra},{self.basis}{star},{self.arity}>({self})"


def linear_map(x: _Linear, on_basis: Callable, zero: _Linear) -> _Linear:
    """Extend ``on_basis(key) -> expansion`` linearly over ``x``."""
    acc: dict = {}
    for k, c in x._terms.items():
        img = on_basis(k)
        for k2, c2 in img._terms.items():
            acc[k2] = acc.get(k2, 0) + c * c2
    return zero._like(acc)


def tensor_from_pairs(
    basis: str, algebra: str, pairs: Iterable[tuple[tuple, int]], arity: int, dual: bool = False
) -> TensorExpansion:
    return TensorExpansion(basis, arity, list(pairs), dual=dual, algebra=algebra)
