"""Counting permutations by the descent sets of ``u`` and ``u^-1``.

``d(S, T)`` fixes both descent sets, ``b(S, T)`` bounds both from above and
``c(S, T)`` bounds ``Des(u)`` above and ``Des(u^-1)`` below.  Tables are
built from a single pass over ``S_n`` followed by subset-sum transforms; the
scalar functions count directly and serve as the oracle for the tables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ..config import AmbientMismatch, InvalidInput
from ..perm_core import Subset, descent_set, inverse, permutations, subsets
from ..textio import table_to_csv

__all__ = [
    "PairTable",
    "d_number",
    "b_number",
    "c_number",
    "descent_pair_counts",
    "pair_table",
    "gessel_report",
    "verify_gessel_identities",
]


@dataclass(frozen=True, eq=False)
class PairTable:
    """Square integer table indexed by permutations (theta) or subsets (d, b, c)."""

    degree: int
    name: str
    labels: tuple
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.name not in ("theta", "d", "b", "c"):
            raise InvalidInput(f"unknown table {self.name!r}")
        self.values.setflags(write=False)

    def _pos(self, key) -> int:
        try:
            return self.labels.index(key)
        except ValueError as exc:
            raise InvalidInput(f"{key!r} does not index the {self.name} table") from exc

    def __getitem__(self, pair) -> int:
        a, b = pair
        return int(self.values[self._pos(a), self._pos(b)])

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.values, self.values.T))

    def label_strings(self) -> list[str]:
        return [str(x) for x in self.labels]

    def to_csv(self) -> str:
        return table_to_csv(self.label_strings(), self.values)

    def to_json(self) -> str:
        data = {
            "name": self.name,
            "degree": self.degree,
            "labels": self.label_strings(),
            "values": self.values.astype(int).tolist(),
        }
        return json.dumps(data, separators=(",", ":"))


def _pair(S: Subset, T: Subset) -> int:
    if S.n != T.n:
        raise AmbientMismatch(f"subsets live in degrees {S.n} and {T.n}")
    return S.n


def d_number(S: Subset, T: Subset) -> int:
    n = _pair(S, T)
    return sum(1 for u in permutations(n) if descent_set(u) == S and descent_set(inverse(u)) == T)


def b_number(S: Subset, T: Subset) -> int:
    n = _pair(S, T)
    return sum(
        1
        for u in permutations(n)
        if descent_set(u).issubset(S) and descent_set(inverse(u)).issubset(T)
    )


def c_number(S: Subset, T: Subset) -> int:
    n = _pair(S, T)
    return sum(
        1
        for u in permutations(n)
        if descent_set(u).issubset(S) and T.issubset(descent_set(inverse(u)))
    )


@lru_cache(maxsize=None)
def _d_array(n: int) -> np.ndarray:
    size = 1 << max(n - 1, 0)
    out = np.zeros((size, size), dtype=np.int64)
    for u in permutations(n):
        out[descent_set(u).mask, descent_set(inverse(u)).mask] += 1
    out.setflags(write=False)
    return out


def _sum_over_subsets(a: np.ndarray, axis: int, bits: int, upward: bool) -> np.ndarray:
    """Zeta transform along one axis: sum over subsets (or supersets) of each index."""
    a = np.array(a, copy=True)
    a = np.moveaxis(a, axis, 0)
    for b in range(bits):
        bit = 1 << b
        for m in range(a.shape[0]):
            if m & bit:
                if upward:
                    a[m ^ bit] += a[m]
                else:
                    a[m] += a[m ^ bit]
    return np.moveaxis(a, 0, axis)


def descent_pair_counts(n: int, kind: str) -> np.ndarray:
    """The ``kind`` table as an array indexed by subset bitmasks."""
    d = _d_array(n)
    bits = max(n - 1, 0)
    if kind == "d":
        return np.array(d)
    if kind == "b":
        return _sum_over_subsets(_sum_over_subsets(d, 0, bits, False), 1, bits, False)
    if kind == "c":
        return _sum_over_subsets(_sum_over_subsets(d, 0, bits, False), 1, bits, True)
    raise InvalidInput(f"unknown descent-pair table {kind!r}")


def pair_table(n: int, kind: str) -> PairTable:
    labels = tuple(subsets(n))
    arr = descent_pair_counts(n, kind)
    order = [S.mask for S in labels]
    return PairTable(n, kind, labels, arr[np.ix_(order, order)])


def gessel_report(n: int) -> dict[str, bool]:
    """Every symmetry of the ``d``, ``b`` and ``c`` tables, checked over all pairs."""
    d = descent_pair_counts(n, "d")
    b = descent_pair_counts(n, "b")
    c = descent_pair_counts(n, "c")
    subs = subsets(n)
    rev = {S.mask: S.reversed().mask for S in subs}
    comp = {S.mask: S.complement().mask for S in subs}
    rc = {S.mask: S.reversed().complement().mask for S in subs}
    masks = [S.mask for S in subs]
    checks = {
        "d symmetric": lambda s, t: d[s, t] == d[t, s],
        "d reversal": lambda s, t: d[s, t] == d[rev[s], rev[t]],
        "d complement": lambda s, t: d[s, t] == d[comp[s], comp[t]],
        "d reverse first": lambda s, t: d[s, t] == d[rev[s], t],
        "b symmetric": lambda s, t: b[s, t] == b[t, s],
        "b reversal": lambda s, t: b[s, t] == b[rev[s], rev[t]],
        "c reversal": lambda s, t: c[s, t] == c[rev[s], rev[t]],
        "c complement swap": lambda s, t: c[s, t] == c[comp[t], comp[s]],
        "b reverse first": lambda s, t: b[s, t] == b[rev[s], t],
        "c reverse first": lambda s, t: c[s, t] == c[rev[s], t],
        "c antipode": lambda s, r: c[s, rc[r]] == c[r, rc[s]],
    }
    return {name: all(bool(f(s, t)) for s in masks for t in masks) for name, f in checks.items()}


def verify_gessel_identities(n: int) -> bool:
    return all(gessel_report(n).values())
