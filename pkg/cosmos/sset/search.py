"""Backtracking search for simplicial maps and lifts in canonical order."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from cosmos.core.errors import BudgetExhausted, NonCommutingSquare
from cosmos.core.models import Budget, Verdict
from cosmos.sset.simplicial import FiniteSimplicialSet, FormalSimplex, Operator, SimplicialMap, compose, compose_ops

logger = logging.getLogger(__name__)

Constraints = Mapping[str, Sequence[Tuple[Operator, FormalSimplex]]]


def search_depth(source: FiniteSimplicialSet, target: FiniteSimplicialSet) -> int:
    """Highest source dimension on which searched maps are assigned."""
    if target.truncated:
        return min(source.dims, target.dims)
    return source.dims


def search_is_exact(source: FiniteSimplicialSet, target: FiniteSimplicialSet) -> bool:
    """Whether maps found on stored data are exactly the maps of the untruncated sets."""
    cosk = target.coskeletal
    if not target.truncated:
        return source.is_complete or (cosk is not None and cosk <= source.dims)
    if cosk is not None and cosk <= min(target.dims, source.dims):
        return True
    return source.is_complete and source.dims <= target.dims


def constraints_from(left: SimplicialMap, top: SimplicialMap) -> Dict[str, List[Tuple[Operator, FormalSimplex]]]:
    """Conditions ``lift ∘ left = top`` keyed by the nondegenerate simplex they constrain."""
    result: Dict[str, List[Tuple[Operator, FormalSimplex]]] = {}
    for sid, image in left.assignment.items():
        if sid in top.assignment:
            result.setdefault(image.base, []).append((image.sigma, top.on(sid)))
    return result


def _image(assignment: Mapping[str, FormalSimplex], x: FormalSimplex) -> FormalSimplex:
    y = assignment[x.base]
    return FormalSimplex(y.base, compose_ops(y.sigma, x.sigma))


def iter_maps(
    source: FiniteSimplicialSet,
    target: FiniteSimplicialSet,
    *,
    constraints: Optional[Constraints] = None,
    over: Optional[Tuple[SimplicialMap, SimplicialMap]] = None,
    budget: Optional[Budget] = None,
) -> Iterator[SimplicialMap]:
    """Every simplicial map ``source → target`` in canonical order.

    ``constraints`` pins composites ``x ∘ sigma`` of chosen images; ``over`` is a pair
    ``(p, bottom)`` requiring ``p ∘ map = bottom``.  Each candidate costs one node.
    """
    budget = budget or Budget()
    constraints = constraints or {}
    depth = search_depth(source, target)
    order = [sid for n in range(depth + 1) for sid in source.nondegenerate(n)]
    assignment: Dict[str, FormalSimplex] = {}

    def admissible(sid: str, y: FormalSimplex) -> bool:
        for sigma, required in constraints.get(sid, ()):
            if FormalSimplex(y.base, compose_ops(y.sigma, sigma)) != required:
                return False
        if over is not None:
            p, bottom = over
            required = bottom.assignment.get(sid)
            if required is not None and p(y) != required:
                return False
        return True

    def candidates(sid: str) -> Iterator[FormalSimplex]:
        n = source.dim(sid)
        if n == 0:
            pool: Sequence[FormalSimplex] = target.formal_simplices(0)
        else:
            key = tuple(_image(assignment, face) for face in source.faces(sid))
            pool = target.simplices_with_boundary(n).get(key, ())
        for y in pool:
            budget.spend()
            if admissible(sid, y):
                yield y

    if not order:
        yield SimplicialMap(source, target, {})
        return
    stack = [candidates(order[0])]
    while stack:
        level = len(stack) - 1
        y = next(stack[-1], None)
        if y is None:
            stack.pop()
            assignment.pop(order[level], None)
            continue
        assignment[order[level]] = y
        if level + 1 == len(order):
            yield SimplicialMap(source, target, dict(assignment))
        else:
            stack.append(candidates(order[level + 1]))


def find_map(
    source: FiniteSimplicialSet,
    target: FiniteSimplicialSet,
    **kwargs: object,
) -> Optional[SimplicialMap]:
    return next(iter_maps(source, target, **kwargs), None)  # type: ignore[arg-type]


@dataclass(frozen=True)
class LiftingProblem:
    """A commuting square ``right ∘ top = bottom ∘ left`` asking for a diagonal."""

    left: SimplicialMap
    right: SimplicialMap
    top: SimplicialMap
    bottom: SimplicialMap

    def __post_init__(self) -> None:
        if (
            self.top.source != self.left.source
            or self.bottom.source != self.left.target
            or self.top.target != self.right.source
            or self.bottom.target != self.right.target
        ):
            raise NonCommutingSquare("lifting problem maps do not form a square")
        upper = compose(self.right, self.top)
        lower = compose(self.bottom, self.left)
        for sid, image in upper.assignment.items():
            if sid in lower.assignment and lower.on(sid) != image:
                raise NonCommutingSquare(f"square does not commute on {sid!r}")

    def describe(self) -> Dict[str, object]:
        return {
            "left": self.left.source.label() + " → " + self.left.target.label(),
            "top": self.top.describe(),
            "bottom": self.bottom.describe(),
        }


def solve_lifting(problem: LiftingProblem, budget: Optional[Budget] = None) -> Verdict:
    """YES with the least filler, NO when the exhaustive search is exact, else UNKNOWN."""
    budget = budget or Budget()
    source, target = problem.left.target, problem.right.source
    exact = search_is_exact(source, target)
    dims = search_depth(source, target)
    try:
        lift = find_map(
            source,
            target,
            constraints=constraints_from(problem.left, problem.top),
            over=(problem.right, problem.bottom),
            budget=budget,
        )
    except BudgetExhausted:
        logger.debug("lift search exhausted budget after %d nodes", budget.spent)
        return Verdict.unknown("search budget exhausted", problem, budget.certificate(dims=dims, exact=False))
    certificate = budget.certificate(dims=dims, exact=exact)
    if lift is not None:
        return Verdict.yes("diagonal filler found", lift, certificate)
    if exact:
        return Verdict.no("no diagonal filler exists", problem, certificate)
    return Verdict.unknown(f"no filler up to dimension {dims}", problem, certificate)


def find_isomorphism(
    source: FiniteSimplicialSet,
    target: FiniteSimplicialSet,
    budget: Optional[Budget] = None,
) -> Optional[SimplicialMap]:
    """A map bijective on nondegenerate simplices, or ``None``."""
    if source.counts() != target.counts():
        return None
    for f in iter_maps(source, target, budget=budget):
        images = [f.on(sid) for sid in source.ids()]
        if not any(y.is_degenerate for y in images) and len(set(images)) == len(images):
            return f
    return None
