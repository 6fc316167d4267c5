"""Duality, descent-pair statistics, cofreeness and the crossed-product structure."""

from .cofree import *  # noqa: F401,F403
from .crossed import *  # noqa: F401,F403
from .descent_pairs import *  # noqa: F401,F403
from .duality import *  # noqa: F401,F403
from . import cofree, crossed, descent_pairs, duality

__all__ = cofree.__all__ + crossed.__all__ + descent_pairs.__all__ + duality.__all__
