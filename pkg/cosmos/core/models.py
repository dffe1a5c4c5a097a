"""Core data models shared across cosmos components."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum, auto
from typing import Any, Dict, Optional, Tuple

from cosmos.core.errors import BudgetExhausted


class Status(Enum):
    """Three-valued outcome of a semi-decidable check."""

    YES = auto()
    NO = auto()
    UNKNOWN = auto()


@dataclass(slots=True)
class Certificate:
    """What a verdict relied on: truncation, search budget and probe sets."""

    dims: Optional[int] = None
    exact: bool = True
    budget: Optional[int] = None
    spent: int = 0
    probes: Tuple[str, ...] = ()
    bound: Optional[int] = None
    notes: Tuple[str, ...] = ()

    def merge(self, other: Certificate) -> Certificate:
        dims = [d for d in (self.dims, other.dims) if d is not None]
        bounds = [b for b in (self.bound, other.bound) if b is not None]
        return Certificate(
            dims=min(dims) if dims else None,
            exact=self.exact and other.exact,
            budget=self.budget if self.budget is not None else other.budget,
            spent=self.spent + other.spent,
            probes=tuple(dict.fromkeys(self.probes + other.probes)),
            bound=min(bounds) if bounds else None,
            notes=tuple(dict.fromkeys(self.notes + other.notes)),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dims": self.dims,
            "exact": self.exact,
            "budget": self.budget,
            "spent": self.spent,
            "probes": list(self.probes),
            "bound": self.bound,
            "notes": list(self.notes),
        }


def describe(value: Any) -> Any:
    """Render a witness as JSON-compatible data."""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if hasattr(value, "describe"):
        return value.describe()
    if isinstance(value, dict):
        return {str(describe(k)): describe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [describe(v) for v in value]
    return str(value)


@dataclass(slots=True)
class Verdict:
    """Result of a check: YES with a witness, NO with a counterexample, or UNKNOWN."""

    status: Status
    reason: str = ""
    witness: Any = None
    certificate: Certificate = field(default_factory=Certificate)

    @classmethod
    def yes(cls, reason: str = "", witness: Any = None, certificate: Optional[Certificate] = None) -> Verdict:
        return cls(Status.YES, reason, witness, certificate or Certificate())

    @classmethod
    def no(cls, reason: str = "", witness: Any = None, certificate: Optional[Certificate] = None) -> Verdict:
        return cls(Status.NO, reason, witness, certificate or Certificate())

    @classmethod
    def unknown(cls, reason: str = "", witness: Any = None, certificate: Optional[Certificate] = None) -> Verdict:
        return cls(Status.UNKNOWN, reason, witness, certificate or Certificate(exact=False))

    @property
    def is_yes(self) -> bool:
        return self.status is Status.YES

    @property
    def is_no(self) -> bool:
        return self.status is Status.NO

    @property
    def is_unknown(self) -> bool:
        return self.status is Status.UNKNOWN

    def __bool__(self) -> bool:
        return self.status is Status.YES

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.name,
            "reason": self.reason,
            "witness": describe(self.witness),
            "certificate": self.certificate.to_dict(),
        }


class Budget:
    """Node counter shared by the searches of one public operation."""

    def __init__(self, limit: Optional[int] = None) -> None:
        if limit is None:
            from cosmos.config import config

            limit = config.budget
        self.limit = limit
        self.spent = 0

    def spend(self, nodes: int = 1) -> None:
        self.spent += nodes
        if self.spent > self.limit:
            raise BudgetExhausted(self.spent)

    def certificate(self, **kwargs: Any) -> Certificate:
        return Certificate(budget=self.limit, spent=self.spent, **kwargs)
