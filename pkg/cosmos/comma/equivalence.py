"""Equivalences of spans over a product, decided by search with a fiber-count obstruction."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from cosmos.cat.category import label
from cosmos.comma.objects import CommaObject
from cosmos.core.base import Cosmos, TwoCell
from cosmos.core.errors import BoundaryMismatch, BudgetExhausted, InstanceMismatch
from cosmos.core.models import Budget, Certificate, Verdict
from cosmos.htpy2cat.cells import is_identity, whisker

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Span:
    """``(q, p): E → C × B``."""

    cosmos: Cosmos
    apex: Any
    q: Any
    p: Any

    @classmethod
    def of_comma(cls, comma_object: CommaObject) -> Span:
        return cls(comma_object.cosmos, comma_object.apex, comma_object.p1, comma_object.p0)

    @property
    def base(self) -> Tuple[Any, Any]:
        return self.q.target, self.p.target

    def describe(self) -> Dict[str, Any]:
        return {"apex": label(self.apex), "q": label(self.q), "p": label(self.p)}


def fiber_counts(span: Span) -> Counter:
    """Isomorphism classes of elements of E over each pair of elements ``(c, b)``.

    Two elements are identified when an invertible 2-cell between them lies over
    identities; a fibered equivalence preserves these counts.
    """
    K = span.cosmos
    one = K.terminal()
    hom = K.hom(one, span.apex)
    Q = K.postcompose(span.q, one)
    P = K.postcompose(span.p, one)
    over_c, over_b = K.hom(one, span.q.target), K.hom(one, span.p.target)
    classes: Dict[Tuple[Any, Any], list] = {}
    for e in hom.objects:
        key = (Q(e), P(e))
        bucket = classes.setdefault(key, [])
        if not any(
            any(
                hom.is_iso(a) and over_c.is_identity(Q.arrow(a)) and over_b.is_identity(P.arrow(a))
                for a in hom.hom(e, rep)
            )
            for rep in bucket
        ):
            bucket.append(e)
    return Counter({key: len(bucket) for key, bucket in classes.items()})


def _over(span: Span, other: Span, w: Any) -> bool:
    K = span.cosmos
    return K.compose(other.q, w) == span.q and K.compose(other.p, w) == span.p


def _fibered_iso(span: Span, source: Any, target: Any) -> Optional[TwoCell]:
    """An invertible 2-cell ``source ⇒ target`` whose whiskers by the legs are identities."""
    K = span.cosmos
    for cell in K.cells(source, target):
        if K.is_invertible(cell) and is_identity(whisker(span.q, cell)) and is_identity(whisker(span.p, cell)):
            return cell
    return None


def fibered_equivalence_search(
    first: Span,
    second: Span,
    budget: Optional[Budget] = None,
    forward: Optional[Any] = None,
) -> Verdict:
    """An equivalence ``E ≃ E′`` over ``C × B``; ``forward`` fixes the map ``E → E′``."""
    K = first.cosmos
    if second.cosmos is not K:
        raise InstanceMismatch("spans from different cosmos instances")
    if first.base != second.base:
        raise BoundaryMismatch("spans over different bases")
    budget = budget or Budget()
    counts, counts2 = fiber_counts(first), fiber_counts(second)
    if counts != counts2:
        fiber = next(key for key in sorted(set(counts) | set(counts2), key=label) if counts[key] != counts2[key])
        return Verdict.no(
            "fibers have different numbers of isomorphism classes",
            {"fiber": fiber, "counts": (counts[fiber], counts2[fiber])},
            Certificate(dims=getattr(K, "dims", None), exact=True, notes=("obstruction: fiber counts",)),
        )
    E, E2 = first.apex, second.apex
    candidates = (forward,) if forward is not None else K.one_cells(E, E2)
    backward: Optional[list] = None
    try:
        for w in candidates:
            budget.spend()
            if not _over(first, second, w):
                continue
            if backward is None:
                backward = [v for v in K.one_cells(E2, E) if _over(second, first, v)]
                budget.spend(len(backward))
            for v in backward:
                unit = _fibered_iso(first, K.identity(E), K.compose(v, w))
                if unit is None:
                    continue
                counit = _fibered_iso(second, K.compose(w, v), K.identity(E2))
                if counit is None:
                    continue
                logger.info("fibered equivalence %s ≃ %s found", label(E), label(E2))
                return Verdict.yes(
                    "equivalence over the base",
                    {"forward": w, "backward": v, "unit": unit, "counit": counit},
                    budget.certificate(dims=getattr(K, "dims", None), exact=K.exact),
                )
    except BudgetExhausted:
        return Verdict.unknown("search budget exhausted", None, budget.certificate(exact=False))
    if forward is not None and not _over(first, second, forward):
        return Verdict.no(
            f"{label(forward)} does not commute with the legs",
            {"map": forward},
            budget.certificate(dims=getattr(K, "dims", None), exact=True),
        )
    if K.exact:
        reason = "no equivalence over the base among all 1-cells"
        if forward is not None:
            reason = f"{label(forward)} has no inverse over the base"
        return Verdict.no(
            reason,
            None,
            budget.certificate(exact=True, notes=("obstruction: exhaustive enumeration",)),
        )
    return Verdict.unknown(
        "fiber counts agree but no fibered equivalence was found in the truncated function complexes",
        None,
        budget.certificate(dims=getattr(K, "dims", None), exact=False),
    )
