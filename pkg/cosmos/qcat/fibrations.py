"""Horn-filling conditions: quasi-categories, Kan complexes, isofibrations, trivial fibrations."""
from __future__ import annotations

import logging
import random
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from cosmos.core.errors import BoundaryMismatch, BudgetExhausted, InputError
from cosmos.core.models import Budget, Verdict
from cosmos.qcat.homotopy import homotopy_category
from cosmos.sset.constructions import boundary, horn, standard_simplex
from cosmos.sset.search import LiftingProblem, constraints_from, find_map, iter_maps, solve_lifting
from cosmos.sset.simplicial import FiniteSimplicialSet, FormalSimplex, SimplicialMap, compose

logger = logging.getLogger(__name__)


def _bound(dims: Optional[int]) -> int:
    from cosmos.config import config

    return config.dim_bound if dims is None else dims


def _top(dims: Optional[int], *spaces: FiniteSimplicialSet) -> int:
    """Highest horn dimension checked: the bound, lowered to the storage of truncated sets."""
    return min([_bound(dims)] + [s.dims for s in spaces if s.truncated])


def _coskeletal_exact(spaces: Iterable[FiniteSimplicialSet], checked: int, offset: int) -> bool:
    """Whether checks up to ``checked`` cover every dimension for these coskeletal sets."""
    levels = [s.coskeletal for s in spaces]
    return all(level is not None for level in levels) and checked >= max(levels) + offset


def _horns(top: int, inner: bool) -> Iterator[Tuple[int, int]]:
    for n in range(2, top + 1):
        for k in range(n + 1):
            if not inner or 0 < k < n:
                yield n, k


def _horn_filling(
    space: FiniteSimplicialSet, dims: Optional[int], inner: bool, budget: Optional[Budget], kind: str
) -> Verdict:
    budget = budget or Budget()
    top = _top(dims, space)
    unique = True
    try:
        for n, k in _horns(top, inner):
            shape, inclusion = horn(n, k)
            for top_map in iter_maps(shape, space, budget=budget):
                fillers = iter_maps(
                    standard_simplex(n), space, constraints=constraints_from(inclusion, top_map), budget=budget
                )
                first = next(fillers, None)
                if first is None:
                    certificate = budget.certificate(dims=top, exact=True)
                    witness = {"horn": f"Λ^{{{n},{k}}}", "n": n, "k": k, "map": top_map}
                    return Verdict.no(f"horn Λ^{{{n},{k}}} has no filler", witness, certificate)
                if next(fillers, None) is not None:
                    unique = False
    except BudgetExhausted:
        return Verdict.unknown("search budget exhausted", None, budget.certificate(dims=top, exact=False))
    exact = _coskeletal_exact([space], top, 1)
    notes = ("inner fillers unique",) if unique and inner else ()
    certificate = budget.certificate(dims=top, exact=exact, notes=notes)
    logger.info("%s is a %s up to dimension %d", space.label(), kind, top)
    return Verdict.yes(f"{kind} up to dim {top}", {"unique_fillers": unique}, certificate)


def is_quasicategory(space: FiniteSimplicialSet, dims: Optional[int] = None, budget: Optional[Budget] = None) -> Verdict:
    """Every inner horn Λ^{n,k} → A with n up to the bound has a filler."""
    return _horn_filling(space, dims, True, budget, "quasi-category")


def is_kan(space: FiniteSimplicialSet, dims: Optional[int] = None, budget: Optional[Budget] = None) -> Verdict:
    """Every horn, inner or outer, has a filler."""
    return _horn_filling(space, dims, False, budget, "Kan complex")


def _relative_lifting(
    p: SimplicialMap,
    shapes: Iterable[Tuple[str, Tuple[FiniteSimplicialSet, SimplicialMap]]],
    budget: Budget,
) -> Optional[Tuple[str, LiftingProblem]]:
    """First lifting problem against ``p`` with no solution, in canonical order."""
    for name, (shape, inclusion) in shapes:
        cell = inclusion.target
        for top in iter_maps(shape, p.source, budget=budget):
            image = compose(p, top)
            for bottom in iter_maps(cell, p.target, constraints=constraints_from(inclusion, image), budget=budget):
                problem = LiftingProblem(inclusion, p, top, bottom)
                verdict = solve_lifting(problem, budget)
                if verdict.is_no:
                    return name, problem
                if verdict.is_unknown:
                    raise BudgetExhausted(budget.spent)
    return None


def _invertible_edges(space: FiniteSimplicialSet) -> List[FormalSimplex]:
    h = homotopy_category(space)
    return [e for e in space.formal_simplices(1) if h.is_iso(h.arrow_of(e))]


def is_isofibration(p: SimplicialMap, dims: Optional[int] = None, budget: Optional[Budget] = None) -> Verdict:
    """Inner-horn lifting plus lifting of invertible edges from either endpoint."""
    budget = budget or Budget()
    for space, role in ((p.source, "source"), (p.target, "target")):
        if is_quasicategory(space, dims, budget).is_no:
            raise InputError(f"{role} {space.label()} is not a quasi-category", law="quasi-category")
    top = _top(dims, p.source, p.target)
    try:
        failure = _relative_lifting(
            p, ((f"Λ^{{{n},{k}}}", horn(n, k)) for n, k in _horns(top, inner=True)), budget
        )
    except BudgetExhausted:
        return Verdict.unknown("search budget exhausted", None, budget.certificate(dims=top, exact=False))
    if failure is not None:
        name, problem = failure
        return Verdict.no(f"no lift against {name}", problem, budget.certificate(dims=top))
    h_source = homotopy_category(p.source)
    for e in _invertible_edges(p.target):
        if not e.is_degenerate:
            start, end = p.target.face_of(e, 1).base, p.target.face_of(e, 0).base
            for x in p.source.nondegenerate(0):
                image = p(FormalSimplex.of(x, 0)).base
                for endpoint, face in ((start, 1), (end, 0)):
                    if image != endpoint:
                        continue
                    lifted = [
                        d
                        for d in p.source.formal_simplices(1)
                        if p(d) == e and p.source.face_of(d, face).base == x and h_source.is_iso(h_source.arrow_of(d))
                    ]
                    if not lifted:
                        witness = {"edge": e, "endpoint": x}
                        reason = f"invertible edge {e.label()} has no invertible lift at {x}"
                        return Verdict.no(reason, witness, budget.certificate(dims=top))
    exact = _coskeletal_exact([p.source, p.target], top, 1)
    return Verdict.yes("isofibration", None, budget.certificate(dims=top, exact=exact))


def is_trivial_fibration(p: SimplicialMap, dims: Optional[int] = None, budget: Optional[Budget] = None) -> Verdict:
    """Right lifting against every ∂Δ^n → Δ^n up to the bound."""
    budget = budget or Budget()
    top = _top(dims, p.source, p.target)
    try:
        failure = _relative_lifting(p, ((f"∂Δ^{n}", boundary(n)) for n in range(top + 1)), budget)
    except BudgetExhausted:
        return Verdict.unknown("search budget exhausted", None, budget.certificate(dims=top, exact=False))
    if failure is not None:
        name, problem = failure
        return Verdict.no(f"no lift against {name}", problem, budget.certificate(dims=top))
    exact = _coskeletal_exact([p.source, p.target], top, 0)
    return Verdict.yes("trivial fibration", None, budget.certificate(dims=top, exact=exact))


def random_boundary_problems(
    p: SimplicialMap,
    count: int = 20,
    dims: Optional[int] = None,
    seed: Optional[int] = None,
    budget: Optional[Budget] = None,
) -> List[LiftingProblem]:
    """Up to ``count`` commuting squares from some ∂Δ^n → Δ^n into ``p``, drawn at random."""
    budget = budget or Budget()
    rng = random.Random(seed)
    top_dim = _top(dims, p.source, p.target)
    tops: Dict[int, List[SimplicialMap]] = {}
    problems: List[LiftingProblem] = []
    for _ in range(count):
        n = rng.randint(0, top_dim)
        shape, inclusion = boundary(n)
        if n not in tops:
            tops[n] = list(iter_maps(shape, p.source, budget=budget))
        if not tops[n]:
            continue
        top = rng.choice(tops[n])
        image = compose(p, top)
        constraints = constraints_from(inclusion, image)
        bottoms = list(iter_maps(inclusion.target, p.target, constraints=constraints, budget=budget))
        if bottoms:
            problems.append(LiftingProblem(inclusion, p, top, rng.choice(bottoms)))
    logger.debug("drew %d boundary problems against %s", len(problems), p.label())
    return problems


def lifts_random_boundaries(
    p: SimplicialMap,
    problems: Optional[Iterable[LiftingProblem]] = None,
    budget: Optional[Budget] = None,
    *,
    count: int = 20,
    dims: Optional[int] = None,
    seed: Optional[int] = None,
) -> bool:
    """Revalidate a trivial fibration verdict: every sampled boundary problem against ``p`` has a lift."""
    budget = budget or Budget()
    if problems is None:
        problems = random_boundary_problems(p, count, dims, seed, budget)
    for problem in problems:
        if problem.right != p:
            raise BoundaryMismatch("lifting problem is posed against a different map")
        if not solve_lifting(problem, budget).is_yes:
            return False
    return True


def is_groupoidal_object(space: FiniteSimplicialSet, dims: Optional[int] = None, budget: Optional[Budget] = None) -> Verdict:
    """A quasi-category whose every edge is invertible in its homotopy category."""
    verdict = is_quasicategory(space, dims, budget)
    if not verdict:
        return verdict
    h = homotopy_category(space)
    for a in h.arrows:
        if not h.is_iso(a):
            return Verdict.no(f"edge {a.label()} is not invertible", a, verdict.certificate)
    return Verdict.yes("every edge is invertible", None, verdict.certificate)


def find_filler(space: FiniteSimplicialSet, n: int, k: int, top: SimplicialMap) -> Optional[SimplicialMap]:
    _, inclusion = horn(n, k)
    return find_map(standard_simplex(n), space, constraints=constraints_from(inclusion, top))


__all__ = [
    "find_filler",
    "is_groupoidal_object",
    "is_isofibration",
    "is_kan",
    "is_quasicategory",
    "is_trivial_fibration",
    "lifts_random_boundaries",
    "random_boundary_problems",
]
