"""Error hierarchy shared by every cosmos module."""
from __future__ import annotations


class CosmosError(Exception):
    """Base class for all errors raised by the toolkit."""


class InputError(CosmosError, ValueError):
    """Input data is malformed or violates a structural law."""

    def __init__(self, message: str, *, law: str | None = None) -> None:
        super().__init__(message)
        self.law = law


class BoundaryMismatch(CosmosError, ValueError):
    """Cells or maps were combined along incompatible boundaries."""


class NonCommutingSquare(BoundaryMismatch):
    """A lifting problem whose square does not commute."""


class TruncationError(CosmosError):
    """Stored dimensions are insufficient for the requested construction."""


class InstanceMismatch(CosmosError, TypeError):
    """Data from different cosmos instances was mixed."""


class LimitMissing(CosmosError):
    """A limit required by a pointwise Kan extension does not exist."""

    def __init__(self, obj: object) -> None:
        super().__init__(f"limit missing at {obj!r}")
        self.obj = obj


class CharacterizationDisagreement(CosmosError, AssertionError):
    """Two characterizations that must agree returned different verdicts."""


class BudgetExhausted(CosmosError):
    """A search ran out of nodes; public operations turn this into UNKNOWN."""

    def __init__(self, spent: int) -> None:
        super().__init__(f"search budget exhausted after {spent} nodes")
        self.spent = spent
