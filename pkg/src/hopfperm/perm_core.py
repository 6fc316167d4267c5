"""Permutations, subsets of ``[n-1]`` and compositions.

A permutation of degree ``n`` is stored as its one-line word, a tuple of the
values ``u(1), ..., u(n)``.  The empty word is the permutation of degree 0.

>>> u = Permutation("42531")
>>> descent_set(u)
Subset({1,3,4}, n=5)
>>> standardize((6, 2, 5))
Permutation('312')
>>> compose(u, inverse(u)) == identity(5)
True
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .config import AmbientMismatch, DegreeMismatch, InvalidInput, check_degree

__all__ = [
    "Permutation",
    "Subset",
    "Composition",
    "parse_permutation",
    "format_permutation",
    "identity",
    "longest",
    "standardize",
    "direct_sum",
    "compose",
    "inverse",
    "descent_set",
    "global_descent_set",
    "augmented_global_descents",
    "inversion_set",
    "length",
    "zeta_of_subset",
    "zeta_pq",
    "coset_reps",
    "shuffles",
    "coset_decompose",
    "segments",
    "projection",
    "is_closed",
    "permutations",
    "subsets",
    "concat_subsets",
]


def parse_permutation(text: str) -> tuple[int, ...]:
    """Read ``"42531"`` or ``"10,1,2,3,4,5,6,7,8,9"``; ``""`` is the empty word."""
    s = text.strip()
    if s in ("", "1_0", "()", "e"):
        return ()
    if "," in s:
        parts = [p.strip() for p in s.strip("()[]").split(",")]
    else:
        parts = list(s)
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise InvalidInput(f"cannot parse permutation {text!r}") from exc


def format_permutation(word: Sequence[int]) -> str:
    if len(word) <= 9:
        return "".join(str(x) for x in word)
    return ",".join(str(x) for x in word)


class Permutation(tuple):
    """One-line word of a bijection of ``{1, ..., n}``.

    Accepts any iterable of integers, or a string in the text format.
    """

    __slots__ = ()

    def __new__(cls, word: Iterable[int] | str = ()):
        if isinstance(word, Permutation):
            return word
        w = parse_permutation(word) if isinstance(word, str) else tuple(int(x) for x in word)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise InvalidInput(f"{w!r} is not a permutation word")
        return tuple.__new__(cls, w)

    @classmethod
    def trusted(cls, word: Iterable[int]) -> "Permutation":
        """Wrap a word already known to be a permutation (no validation)."""
        return tuple.__new__(cls, tuple(word))

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(self)

    def __str__(self) -> str:
        return format_permutation(self)

    def __repr__(self) -> str:
        return f"Permutation('{format_permutation(self)}')"

    def __call__(self, i: int) -> int:
        return self[i - 1]


@dataclass(frozen=True)
class Subset:
    """A subset of ``[n-1]`` together with its ambient degree ``n``."""

    members: tuple[int, ...]
    n: int

    def __init__(self, members: Iterable[int], n: int):
        m = tuple(sorted(set(int(x) for x in members)))
        n = int(n)
        if n < 0:
            raise InvalidInput("ambient degree must be non-negative")
        if m and (m[0] < 1 or m[-1] > n - 1):
            raise InvalidInput(f"{set(m)} is not a subset of [{n - 1}]")
        object.__setattr__(self, "members", m)
        object.__setattr__(self, "n", n)

    @classmethod
    def full(cls, n: int) -> "Subset":
        return cls(range(1, n), n)

    @classmethod
    def empty(cls, n: int) -> "Subset":
        return cls((), n)

    @classmethod
    def from_composition(cls, parts: Sequence[int]) -> "Subset":
        return Composition(parts).subset()

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "Subset":
        return cls((i for i in range(1, n) if mask >> (i - 1) & 1), n)

    @property
    def mask(self) -> int:
        m = 0
        for i in self.members:
            m |= 1 << (i - 1)
        return m

    def composition(self) -> "Composition":
        if self.n == 0:
            return Composition(())
        cuts = (0,) + self.members + (self.n,)
        return Composition(cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1))

    def complement(self) -> "Subset":
        return Subset(set(range(1, self.n)) - set(self.members), self.n)

    def reversed(self) -> "Subset":
        """The subset ``{n - i : i in S}``."""
        return Subset((self.n - i for i in self.members), self.n)

    def _check(self, other: "Subset") -> None:
        if not isinstance(other, Subset):
            raise InvalidInput(f"expected a Subset, got {other!r}")
        if other.n != self.n:
            raise AmbientMismatch(f"ambient degrees {self.n} and {other.n} differ")

    def issubset(self, other: "Subset") -> bool:
        self._check(other)
        return set(self.members) <= set(other.members)

    def union(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.members + other.members, self.n)

    def intersection(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(set(self.members) & set(other.members), self.n)

    def difference(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(set(self.members) - set(other.members), self.n)

    def __le__(self, other: "Subset") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "Subset") -> bool:
        return self.issubset(other) and self != other

    def __contains__(self, i: object) -> bool:
        return i in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def sort_key(self) -> tuple:
        return (self.n, self.members)

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.members) + "}"

    def __repr__(self) -> str:
        return f"Subset({self}, n={self.n})"


class Composition(tuple):
    """A sequence of positive parts; the empty composition has total 0."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] | str = ()):
        if isinstance(parts, Composition):
            return parts
        if isinstance(parts, str):
            s = parts.strip().strip("()[] ")
            parts = [int(x) for x in s.split(",") if x.strip()] if s else []
        p = tuple(int(x) for x in parts)
        if any(x < 1 for x in p):
            raise InvalidInput(f"composition parts must be positive: {p!r}")
        return tuple.__new__(cls, p)

    @property
    def total(self) -> int:
        return sum(self)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    def subset(self) -> Subset:
        """The set ``I(alpha)`` of proper partial sums."""
        return Subset(itertools.accumulate(self[:-1]), self.total)

    def reversed(self) -> "Composition":
        return Composition(self[::-1])

    def sort_key(self) -> tuple:
        return self.subset().sort_key()

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self) + ")"

    def __repr__(self) -> str:
        return f"Composition('{self}')"


def _as_perm(u) -> Permutation:
    return u if isinstance(u, Permutation) else Permutation(u)


def _as_subset(S, n: int | None = None) -> Subset:
    if isinstance(S, Subset):
        if n is not None and S.n != n:
            raise AmbientMismatch(f"subset has ambient {S.n}, expected {n}")
        return S
    if isinstance(S, Composition):
        return _as_subset(S.subset(), n)
    if n is None:
        raise InvalidInput("a bare collection needs an ambient degree")
    return Subset(S, n)


def identity(n: int) -> Permutation:
    return Permutation.trusted(range(1, n + 1))


def longest(n: int) -> Permutation:
    return Permutation.trusted(range(n, 0, -1))


def standardize(values: Sequence[int]) -> Permutation:
    vals = parse_permutation(values) if isinstance(values, str) else tuple(values)
    if len(set(vals)) != len(vals):
        raise InvalidInput(f"values must be distinct: {vals!r}")
    return Permutation.trusted(_std(vals))


def _std(vals: Sequence[int]) -> tuple[int, ...]:
    order = sorted(range(len(vals)), key=vals.__getitem__)
    out = [0] * len(vals)
    for rank, pos in enumerate(order, 1):
        out[pos] = rank
    return tuple(out)


def direct_sum(*perms: Sequence[int]) -> Permutation:
    """``u x v x ...``: blocks placed side by side, later blocks shifted up."""
    out: list[int] = []
    for u in map(_as_perm, perms):
        shift = len(out)
        out.extend(shift + x for x in u)
    return Permutation.trusted(out)


def compose(u: Sequence[int], v: Sequence[int]) -> Permutation:
    """Function composition ``(u . v)(i) = u(v(i))``."""
    u, v = _as_perm(u), _as_perm(v)
    if len(u) != len(v):
        raise DegreeMismatch(f"cannot compose degrees {len(u)} and {len(v)}")
    return Permutation.trusted(u[x - 1] for x in v)


def inverse(u: Sequence[int]) -> Permutation:
    u = _as_perm(u)
    out = [0] * len(u)
    for i, x in enumerate(u, 1):
        out[x - 1] = i
    return Permutation.trusted(out)


def descent_set(u: Sequence[int]) -> Subset:
    u = _as_perm(u)
    n = len(u)
    return Subset((p for p in range(1, n) if u[p - 1] > u[p]), n)


def _gdes(u: Sequence[int]) -> list[int]:
    n = len(u)
    out = []
    low = n + 1
    for p in range(1, n):
        low = min(low, u[p - 1])
        if low == n - p + 1:
            out.append(p)
    return out


def global_descent_set(u: Sequence[int]) -> Subset:
    u = _as_perm(u)
    return Subset(_gdes(u), len(u))


def augmented_global_descents(u: Sequence[int]) -> tuple[int, ...]:
    """``GDes(u) ∪ {0, n}``, the admissible cut points of the monomial coproduct."""
    u = _as_perm(u)
    n = len(u)
    return tuple(sorted({0, n, *_gdes(u)}))


def inversion_set(u: Sequence[int]) -> frozenset[tuple[int, int]]:
    u = _as_perm(u)
    n = len(u)
    return frozenset(
        (i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if u[i] > u[j]
    )


def length(u: Sequence[int]) -> int:
    u = _as_perm(u)
    n = len(u)
    return sum(1 for i in range(n) for j in range(i + 1, n) if u[i] > u[j])


def _block_sizes(S: Subset) -> list[int]:
    return list(S.composition()) if S.n else []


def zeta_of_subset(n: int, S) -> Permutation:
    """Maximal element of ``{u : Des(u) ⊆ S}``.

    Blocks of consecutive increasing values, the first block holding the
    largest values.
    """
    S = _as_subset(S, n)
    out: list[int] = []
    top = n
    for size in _block_sizes(S):
        out.extend(range(top - size + 1, top + 1))
        top -= size
    return Permutation.trusted(out)


def zeta_pq(p: int, q: int) -> Permutation:
    return Permutation.trusted(tuple(range(q + 1, q + p + 1)) + tuple(range(1, q + 1)))


@lru_cache(maxsize=None)
def _coset_reps(n: int, members: tuple[int, ...]) -> tuple[Permutation, ...]:
    sizes = _block_sizes(Subset(members, n))
    found: list[tuple[int, ...]] = []

    def rec(remaining: tuple[int, ...], k: int, acc: tuple[int, ...]):
        if k == len(sizes) - 1:
            found.append(acc + remaining)
            return
        for chosen in itertools.combinations(remaining, sizes[k]):
            rest = tuple(x for x in remaining if x not in chosen)
            rec(rest, k + 1, acc + chosen)

    if n == 0:
        return (Permutation.trusted(()),)
    rec(tuple(range(1, n + 1)), 0, ())
    return tuple(Permutation.trusted(w) for w in sorted(found))


def coset_reps(n: int, S) -> tuple[Permutation, ...]:
    """All ``zeta`` in ``S_n`` with ``Des(zeta) ⊆ S`` in lexicographic order."""
    S = _as_subset(S, n)
    check_degree(n)
    return _coset_reps(n, S.members)


def shuffles(p: int, q: int) -> tuple[Permutation, ...]:
    """``Sh(p, q)``: permutations with at most one descent, at ``p``."""
    n = p + q
    members = (p,) if 0 < p < n else ()
    check_degree(n)
    return _coset_reps(n, members)


def segments(u: Sequence[int], S) -> list[tuple[int, ...]]:
    """Raw segments of the word of ``u`` cut at the positions of ``S``."""
    u = _as_perm(u)
    S = _as_subset(S, len(u))
    cuts = (0,) + S.members + (len(u),)
    return [tuple(u[cuts[i]:cuts[i + 1]]) for i in range(len(cuts) - 1)] if len(u) else [()]


def projection(u: Sequence[int], S) -> Permutation:
    """``u_S``: direct sum of the standardized segments of ``u`` cut at ``S``."""
    return direct_sum(*(_std(seg) for seg in segments(u, S)))


def coset_decompose(w: Sequence[int], S) -> tuple[Permutation, list[Permutation]]:
    """Write ``w = zeta . (b_1 x ... x b_k)`` with ``zeta`` in ``Sh(S)``."""
    w = _as_perm(w)
    S = _as_subset(S, len(w))
    blocks = [Permutation.trusted(_std(seg)) for seg in segments(w, S)]
    zeta = compose(w, inverse(direct_sum(*blocks)))
    return zeta, blocks


def is_closed(u: Sequence[int]) -> bool:
    u = _as_perm(u)
    return descent_set(u) == global_descent_set(u)


@lru_cache(maxsize=None)
def _perms(n: int) -> tuple[Permutation, ...]:
    return tuple(Permutation.trusted(w) for w in itertools.permutations(range(1, n + 1)))


def permutations(n: int) -> tuple[Permutation, ...]:
    """``S_n`` in lexicographic order; refuses degrees above the cap."""
    if n < 0:
        raise InvalidInput("degree must be non-negative")
    check_degree(n)
    return _perms(n)


def subsets(n: int) -> list[Subset]:
    """All subsets of ``[n-1]``, ordered by bitmask."""
    check_degree(n)
    if n == 0:
        return [Subset.empty(0)]
    return [Subset.from_mask(m, n) for m in range(1 << (n - 1))]


def concat_subsets(S: Subset, T: Subset) -> Subset:
    """``S ∪ {p} ∪ (p + T)``: the subset of the concatenated composition."""
    p, q = S.n, T.n
    if p == 0:
        return Subset(T.members, q)
    if q == 0:
        return Subset(S.members, p)
    return Subset(S.members + (p,) + tuple(p + t for t in T.members), p + q)
