"""Exact computations in the Hopf algebra of permutations and in quasi-symmetric functions.

>>> from hopfperm import M, m_to_f
>>> print(m_to_f(M("4123")))
F[4123] - F[4132] - F[4213] + F[4321]
"""

from .config import (
    AmbientMismatch,
    DegreeMismatch,
    DegreeTooLarge,
    HopfPermError,
    InvalidInput,
    max_degree,
)
from .linear import PermExpansion, QSymExpansion, TensorExpansion
from .perm_core import Composition, Permutation, Subset
from . import qsym_algebra as _qsym
from . import ssym_algebra as _ssym
from .ssym_algebra import F, M, takeuchi_antipode
from .qsym_algebra import QF, QM, CubeFace, descent_map, splitting_Z
from .textio import dumps, format_expansion, loads, parse_expansion


def _algebra(x):
    return _qsym if isinstance(x, QSymExpansion) else _ssym


def product(x, y):
    """Product in whichever algebra ``x`` belongs to.

    >>> print(product(QM("(2)"), QM("(1,1)")))
    M(1,3) + M(1,1,2) + M(1,2,1) + M(2,1,1) + M(3,1)
    """
    return _algebra(x).product(x, y)


def coproduct(x):
    return _algebra(x).coproduct(x)


def antipode(x):
    return _algebra(x).antipode(x)


def f_to_m(x):
    return _algebra(x).f_to_m(x)


def m_to_f(x):
    return _algebra(x).m_to_f(x)


def to_basis(x, basis: str):
    return _algebra(x).to_basis(x, basis)

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatch",
    "DegreeMismatch",
    "DegreeTooLarge",
    "HopfPermError",
    "InvalidInput",
    "max_degree",
    "PermExpansion",
    "QSymExpansion",
    "TensorExpansion",
    "Composition",
    "Permutation",
    "Subset",
    "F",
    "M",
    "antipode",
    "coproduct",
    "f_to_m",
    "m_to_f",
    "product",
    "takeuchi_antipode",
    "to_basis",
    "QF",
    "QM",
    "CubeFace",
    "descent_map",
    "splitting_Z",
    "dumps",
    "format_expansion",
    "loads",
    "parse_expansion",
]
