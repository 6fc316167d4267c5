"""The left weak order on ``S_n``.

``u <= v`` when the inversion set of ``u`` (pairs of positions) is contained
in that of ``v``.  Inversion sets are encoded as integer bitmasks, so a
comparison is a single ``&``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .config import DegreeMismatch, InvalidInput, check_degree
from .perm_core import (
    Permutation,
    _as_perm,
    _as_subset,
    compose,
    descent_set,
    direct_sum,
    inverse,
    length,
    permutations,
)

__all__ = [
    "inversion_mask",
    "leq",
    "covers",
    "lower_covers",
    "join",
    "meet",
    "meet_by_chains",
    "from_inversion_set",
    "interval",
    "upset",
    "downset",
    "DownSet",
    "mobius",
    "mobius_row",
    "MobiusCache",
    "rank_of",
    "rho_embed",
    "is_interval_of_shuffles",
]


@lru_cache(maxsize=None)
def _pair_bits(n: int) -> tuple[tuple[int, int, int], ...]:
    bits = []
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            bits.append((i, j, 1 << k))
            k += 1
    return tuple(bits)


def inversion_mask(u: Sequence[int]) -> int:
    """Bitmask of the inversion set; bit order follows pairs ``(i, j)`` lexicographically."""
    return _mask(_as_perm(u))


@lru_cache(maxsize=1 << 18)
def _mask(u: Permutation) -> int:
    m = 0
    for i, j, b in _pair_bits(len(u)):
        if u[i] > u[j]:
            m |= b
    return m


def _same_degree(u, v) -> None:
    if len(u) != len(v):
        raise DegreeMismatch(f"degrees {len(u)} and {len(v)} differ")


def leq(u: Sequence[int], v: Sequence[int]) -> bool:
    u, v = _as_perm(u), _as_perm(v)
    _same_degree(u, v)
    return inversion_mask(u) & ~inversion_mask(v) == 0


def covers(u: Sequence[int]) -> list[Permutation]:
    """Upper covers: swap the values ``k`` and ``k+1`` whenever ``k`` comes first."""
    u = _as_perm(u)
    n = len(u)
    pos = [0] * (n + 2)
    for i, x in enumerate(u):
        pos[x] = i
    out = []
    for k in range(1, n):
        if pos[k] < pos[k + 1]:
            w = list(u)
            w[pos[k]], w[pos[k + 1]] = k + 1, k
            out.append(Permutation.trusted(w))
    return sorted(out)


def lower_covers(u: Sequence[int]) -> list[Permutation]:
    u = _as_perm(u)
    n = len(u)
    pos = [0] * (n + 2)
    for i, x in enumerate(u):
        pos[x] = i
    out = []
    for k in range(1, n):
        if pos[k] > pos[k + 1]:
            w = list(u)
            w[pos[k]], w[pos[k + 1]] = k + 1, k
            out.append(Permutation.trusted(w))
    return sorted(out)


def _relation(n: int, mask: int) -> list[int]:
    """Successor bitsets ``rel[i]`` of positions ``j > i`` with ``(i, j)`` in ``mask``."""
    rel = [0] * n
    for i, j, b in _pair_bits(n):
        if mask & b:
            rel[i] |= 1 << j
    return rel


def _closure(rel: list[int]) -> list[int]:
    n = len(rel)
    reach = [0] * n
    for i in range(n - 1, -1, -1):
        r = rel[i]
        acc = r
        j = 0
        while r:
            if r & 1:
                acc |= reach[j]
            r >>= 1
            j += 1
        reach[i] = acc
    return reach


def _mask_from_relation(n: int, rel: list[int]) -> int:
    m = 0
    for i, j, b in _pair_bits(n):
        if rel[i] >> j & 1:
            m |= b
    return m


def from_inversion_set(n: int, mask: int) -> Permutation:
    """Rebuild the permutation whose inversion bitmask is ``mask``.

    Raises ``InvalidInput`` when no permutation has that inversion set.
    """
    counts = [0] * n
    for i, j, b in _pair_bits(n):
        if mask & b:
            counts[i] += 1
    remaining = list(range(1, n + 1))
    word = []
    for c in counts:
        if c >= len(remaining):
            raise InvalidInput("not an inversion set")
        word.append(remaining.pop(c))
    u = Permutation.trusted(word)
    if inversion_mask(u) != mask:
        raise InvalidInput("not an inversion set")
    return u


def join(u: Sequence[int], v: Sequence[int]) -> Permutation:
    """Least upper bound: the inversion set is the transitive closure of the union."""
    u, v = _as_perm(u), _as_perm(v)
    _same_degree(u, v)
    n = len(u)
    rel = _relation(n, inversion_mask(u) | inversion_mask(v))
    return from_inversion_set(n, _mask_from_relation(n, _closure(rel)))


def _omega_times(u: Sequence[int]) -> Permutation:
    n = len(u)
    return Permutation.trusted(n + 1 - x for x in u)


def meet(u: Sequence[int], v: Sequence[int]) -> Permutation:
    """Greatest lower bound, as ``omega . join(omega . u, omega . v)``."""
    u, v = _as_perm(u), _as_perm(v)
    _same_degree(u, v)
    return _omega_times(join(_omega_times(u), _omega_times(v)))


def meet_by_chains(u: Sequence[int], v: Sequence[int]) -> Permutation:
    """Meet from the chain criterion.

    ``(i, j)`` is an inversion of the meet iff every chain of positions from
    ``i`` up to ``j`` takes at least one step inside ``Inv(u) ∩ Inv(v)``.
    Equivalently ``j`` is unreachable from ``i`` using only steps outside it.
    """
    u, v = _as_perm(u), _as_perm(v)
    _same_degree(u, v)
    n = len(u)
    common = inversion_mask(u) & inversion_mask(v)
    full = (1 << len(_pair_bits(n))) - 1
    reach = _closure(_relation(n, full & ~common))
    mask = 0
    for i, j, b in _pair_bits(n):
        if not reach[i] >> j & 1:
            mask |= b
    return from_inversion_set(n, mask)


@lru_cache(maxsize=None)
def _enumeration(n: int) -> tuple[tuple[Permutation, ...], dict, np.ndarray, np.ndarray]:
    perms = permutations(n)
    index = {u: k for k, u in enumerate(perms)}
    masks = np.array([inversion_mask(u) for u in perms], dtype=np.int64)
    lengths = np.array([length(u) for u in perms], dtype=np.int64)
    return perms, index, masks, lengths


def rank_of(u: Sequence[int]) -> int:
    """Position of ``u`` in the lexicographic enumeration of ``S_n``."""
    u = _as_perm(u)
    return _enumeration(len(u))[1][tuple(u)]


def _upset_indices(u: Sequence[int]) -> np.ndarray:
    u = _as_perm(u)
    _, _, masks, _ = _enumeration(len(u))
    m = inversion_mask(u)
    return np.flatnonzero((masks & m) == m)


def upset(u: Sequence[int]) -> list[Permutation]:
    """``{v : u <= v}`` in lexicographic order."""
    perms = _enumeration(len(u))[0]
    return [perms[k] for k in _upset_indices(u)]


def interval(u: Sequence[int], v: Sequence[int]) -> list[Permutation]:
    """``[u, v]`` in lexicographic order; empty when ``u`` is not below ``v``."""
    u, v = _as_perm(u), _as_perm(v)
    _same_degree(u, v)
    perms, _, masks, _ = _enumeration(len(u))
    mu, mv = inversion_mask(u), inversion_mask(v)
    if mu & ~mv:
        return []
    sel = ((masks & mu) == mu) & ((masks & ~mv) == 0)
    return [perms[k] for k in np.flatnonzero(sel)]


@dataclass(frozen=True, eq=False)
class DownSet:
    """Membership indicator of a lower set over the lexicographic enumeration."""

    degree: int
    members: np.ndarray

    def __contains__(self, u: object) -> bool:
        try:
            return bool(self.members[rank_of(u)]) if len(u) == self.degree else False
        except (KeyError, TypeError):
            return False

    def __len__(self) -> int:
        return int(self.members.sum())

    def __iter__(self) -> Iterator[Permutation]:
        perms = _enumeration(self.degree)[0]
        return (perms[k] for k in np.flatnonzero(self.members))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DownSet):
            return self.degree == other.degree and bool(np.array_equal(self.members, other.members))
        return NotImplemented

    def __and__(self, other: "DownSet") -> "DownSet":
        if other.degree != self.degree:
            raise DegreeMismatch("down-sets of different degrees")
        return DownSet(self.degree, self.members & other.members)

    def is_lower_set(self) -> bool:
        return all(all(w in self for w in lower_covers(u)) for u in self)


def downset(u: Sequence[int]) -> DownSet:
    u = _as_perm(u)
    _, _, masks, _ = _enumeration(len(u))
    m = inversion_mask(u)
    members = (masks & ~np.int64(m)) == 0
    members.setflags(write=False)
    return DownSet(len(u), members)


class MobiusCache:
    """Memoized Möbius function of the weak order.

    Rows ``v -> mu(u, v)`` are filled on demand by the defining recursion
    ``mu(u, v) = -sum_{u <= w < v} mu(u, w)``.  A lock guards the fill so that
    concurrent callers see exactly the values a fresh computation would give.
    """

    def __init__(self) -> None:
        self._rows: dict[Permutation, dict[Permutation, int]] = {}
        self._lock = threading.Lock()

    def row(self, u: Sequence[int]) -> dict[Permutation, int]:
        u = _as_perm(u)
        row = self._rows.get(u)
        if row is not None:
            return row
        with self._lock:
            row = self._rows.get(u)
            if row is None:
                row = self._compute_row(u)
                self._rows[u] = row
        return row

    def get(self, u: Sequence[int], v: Sequence[int]) -> int:
        u, v = _as_perm(u), _as_perm(v)
        _same_degree(u, v)
        return self.row(u).get(v, 0)

    @staticmethod
    def _compute_row(u: Permutation) -> dict[Permutation, int]:
        check_degree(len(u))
        perms, _, masks, lengths = _enumeration(len(u))
        idx = _upset_indices(u)
        idx = idx[np.argsort(lengths[idx], kind="stable")]
        row: dict[Permutation, int] = {}
        nonzero: list[tuple[int, int]] = []
        for k in idx:
            v = perms[k]
            mv = int(masks[k])
            if not nonzero:
                value = 1
            else:
                value = -sum(c for mw, c in nonzero if mw & ~mv == 0)
            row[v] = value
            if value:
                nonzero.append((mv, value))
        return row

    def clear(self) -> None:
        with self._lock:
            self._rows.clear()

    def __len__(self) -> int:
        return sum(len(r) for r in self._rows.values())

    def values(self) -> Iterator[int]:
        for r in list(self._rows.values()):
            yield from r.values()


_MOBIUS = MobiusCache()


def mobius(u: Sequence[int], v: Sequence[int]) -> int:
    """``mu(u, v)`` on the weak order; 0 when ``u`` is not below ``v``."""
    return _MOBIUS.get(u, v)


def mobius_row(u: Sequence[int]) -> dict[Permutation, int]:
    """All ``v >= u`` with ``mu(u, v)``, including zeros."""
    return _MOBIUS.row(u)


def rho_embed(zeta: Sequence[int], blocks: Sequence[Sequence[int]]) -> Permutation:
    """``(b_1 x ... x b_k) . zeta^{-1}`` for ``zeta`` a coset representative.

    ``zeta`` must have its descents among the partial sums of the block degrees.
    """
    zeta = _as_perm(zeta)
    blocks = [_as_perm(b) for b in blocks]
    sizes = [len(b) for b in blocks]
    n = sum(sizes)
    if len(zeta) != n:
        raise DegreeMismatch(f"zeta has degree {len(zeta)}, blocks total {n}")
    cuts, acc = set(), 0
    for s in sizes[:-1]:
        acc += s
        if 0 < acc < n:
            cuts.add(acc)
    if not set(descent_set(zeta).members) <= cuts:
        raise InvalidInput(f"{zeta} is not a coset representative for block sizes {sizes}")
    return compose(direct_sum(*blocks), inverse(zeta))


def is_interval_of_shuffles(n: int, S) -> bool:
    """Check that ``{Des ⊆ S}`` is exactly the interval below its maximum."""
    from .perm_core import coset_reps, zeta_of_subset

    S = _as_subset(S, n)
    reps = set(coset_reps(n, S))
    return reps == set(interval(tuple(range(1, n + 1)), zeta_of_subset(n, S)))

