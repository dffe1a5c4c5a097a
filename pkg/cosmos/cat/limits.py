"""Limits and colimits of finite diagrams by terminal-cone enumeration."""
from __future__ import annotations

import logging
from typing import Iterator, Optional, Tuple

from cosmos.cat.category import Arrow, CatFunctor, NatTransform, Obj, constant_functor, label
from cosmos.cat.functors import iter_transformations, opposite_functor

logger = logging.getLogger(__name__)


def cones(diagram: CatFunctor, apex: Obj) -> Iterator[NatTransform]:
    """Cones ``Δapex ⇒ diagram`` in canonical order."""
    return iter_transformations(constant_functor(diagram.source, diagram.target, apex), diagram)


def factor(diagram: CatFunctor, cone: NatTransform, other: NatTransform) -> Tuple[Arrow, ...]:
    """All arrows ``h`` with ``cone_j ∘ h = other_j`` for every j; J must be nonempty."""
    C = diagram.target
    first = diagram.source.objects[0]
    apex, source = cone.source(first), other.source(first)
    return tuple(
        h
        for h in C.hom(source, apex)
        if all(C.compose(cone[j], h) == other[j] for j in diagram.source.objects)
    )


def is_limit(diagram: CatFunctor, apex: Obj, cone: NatTransform) -> bool:
    """Every cone factors uniquely through ``cone``."""
    C = diagram.target
    if not diagram.source.objects:
        return all(len(C.hom(c, apex)) == 1 for c in C.objects)
    return all(len(factor(diagram, cone, other)) == 1 for c in C.objects for other in cones(diagram, c))


def limit_oracle(diagram: CatFunctor) -> Optional[Tuple[Obj, NatTransform]]:
    """The least limit cone in canonical order, or ``None`` when the diagram has no limit."""
    for apex in diagram.target.objects:
        for cone in cones(diagram, apex):
            if is_limit(diagram, apex, cone):
                logger.debug("limit of %s found at %s", diagram.label(), label(apex))
                return apex, cone
    return None


def colimit_oracle(diagram: CatFunctor) -> Optional[Tuple[Obj, NatTransform]]:
    """The least colimit cocone ``diagram ⇒ Δapex``, computed as a limit in the opposite category."""
    found = limit_oracle(opposite_functor(diagram))
    if found is None:
        return None
    apex, cone = found
    J, C = diagram.source, diagram.target
    return apex, NatTransform(diagram, constant_functor(J, C, apex), cone.components)


def is_colimit(diagram: CatFunctor, apex: Obj, cocone: NatTransform) -> bool:
    op = opposite_functor(diagram)
    J, C = op.source, op.target
    return is_limit(op, apex, NatTransform(constant_functor(J, C, apex), op, cocone.components))
