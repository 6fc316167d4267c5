"""Runtime configuration and the exception hierarchy."""

from __future__ import annotations

import os

DEFAULT_MAX_DEGREE = 8
ENV_MAX_DEGREE = "HOPFPERM_MAX_DEGREE"


class HopfPermError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(HopfPermError, ValueError):
    """Malformed permutation, subset, composition or argument."""


class AmbientMismatch(InvalidInput):
    """Two objects carry different ambient degrees."""


class DegreeMismatch(InvalidInput):
    """Degrees of the arguments are incompatible with the operation."""


class DegreeTooLarge(HopfPermError, ValueError):
    """An enumeration was requested above the configured degree cap."""


def max_degree() -> int:
    """Current degree cap, read from the environment on every call."""
    raw = os.environ.get(ENV_MAX_DEGREE)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_DEGREE
    try:
        value = int(raw)
    except ValueError as exc:
        raise InvalidInput(f"{ENV_MAX_DEGREE} must be an integer, got {raw!r}") from exc
    if value < 0:
        raise InvalidInput(f"{ENV_MAX_DEGREE} must be non-negative")
    return value


def check_degree(n: int) -> None:
    cap = max_degree()
    if n > cap:
        raise DegreeTooLarge(f"degree {n} exceeds the configured maximum {cap}")
