"""Equivalences of quasi-categories witnessed by 𝕀-homotopies."""
from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

from cosmos.cat.category import CatFunctor, compose_functors, identity_functor
from cosmos.cat.functors import is_equivalence, iter_transformations
from cosmos.core.errors import BudgetExhausted
from cosmos.core.models import Budget, Verdict
from cosmos.qcat.homotopy import homotopy_category, homotopy_functor
from cosmos.qcat.interval import Interval, interval
from cosmos.sset.constructions import product, to_terminal
from cosmos.sset.search import constraints_from, find_map, iter_maps
from cosmos.sset.simplicial import FiniteSimplicialSet, FormalSimplex, Operator, SimplicialMap, compose, compose_all, identity_map

logger = logging.getLogger(__name__)


def _homotopy(
    space: FiniteSimplicialSet,
    target: FiniteSimplicialSet,
    start: SimplicialMap,
    end: SimplicialMap,
    shape: Interval,
    budget: Budget,
) -> Optional[SimplicialMap]:
    """A map 𝕀 × X → Y restricting to ``start`` and ``end`` at the endpoints."""
    cylinder = product(shape.space, space)
    constraints: Dict[str, List[Tuple[Operator, FormalSimplex]]] = {}
    for endpoint, value in ((shape.start, start), (shape.end, end)):
        inclusion = cylinder.pair(compose(endpoint, to_terminal(space)), identity_map(space))
        for sid, pins in constraints_from(inclusion, value).items():
            constraints.setdefault(sid, []).extend(pins)
    return find_map(cylinder, target, constraints=constraints, budget=budget)


def is_equivalence_qcat(f: SimplicialMap, budget: Optional[Budget] = None, dims: Optional[int] = None) -> Verdict:
    """Search an inverse with 𝕀-homotopies; NO only from an obstruction in homotopy categories."""
    budget = budget or Budget()
    source, target = f.source, f.target
    h_source, h_target = homotopy_category(source), homotopy_category(target)
    hf = homotopy_functor(f, h_source, h_target)
    obstruction = is_equivalence(hf)
    if obstruction.is_no:
        certificate = budget.certificate(notes=("homotopy category obstruction",))
        return Verdict.no(f"h({f.label()}) is not an equivalence: {obstruction.reason}", obstruction.witness, certificate)
    shape = interval(dims)
    try:
        for g in iter_maps(target, source, budget=budget):
            hg = homotopy_functor(g, h_target, h_source)
            if not _isomorphic_to_identity(compose_functors(hg, hf), identity_functor(h_source)):
                continue
            if not _isomorphic_to_identity(compose_functors(hf, hg), identity_functor(h_target)):
                continue
            unit = _homotopy(source, source, identity_map(source), compose_all([g, f]), shape, budget)
            if unit is None:
                continue
            counit = _homotopy(target, target, compose_all([f, g]), identity_map(target), shape, budget)
            if counit is None:
                continue
            certificate = budget.certificate(dims=shape.space.dims, exact=True)
            logger.info("%s is an equivalence with inverse %s", f.label(), g.label())
            return Verdict.yes("homotopy inverse found", {"inverse": g, "unit": unit, "counit": counit}, certificate)
    except BudgetExhausted:
        return Verdict.unknown("search budget exhausted", None, budget.certificate(dims=shape.space.dims, exact=False))
    return Verdict.unknown(
        "no inverse with 𝕀-homotopies found at this truncation",
        None,
        budget.certificate(dims=shape.space.dims, exact=False),
    )


def _isomorphic_to_identity(functor: CatFunctor, identity: CatFunctor) -> bool:
    return any(t.is_invertible() for t in iter_transformations(identity, functor))
