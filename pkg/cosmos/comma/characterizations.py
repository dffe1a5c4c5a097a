"""Terminal elements, limits, absolute liftings and adjunctions, each decided two ways through commas."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from cosmos.cat.category import label, ordinal
from cosmos.comma.equivalence import Span, fibered_equivalence_search
from cosmos.comma.objects import CommaObject, comma, cone_at, induce_1cell
from cosmos.core.base import Cosmos, TwoCell
from cosmos.core.errors import BoundaryMismatch, BudgetExhausted, CharacterizationDisagreement
from cosmos.core.models import Budget, Certificate, Verdict
from cosmos.htpy2cat.adjunctions import AdjunctionData, check_adjunction, check_equivalence_2cat, find_adjunction
from cosmos.htpy2cat.cells import vcompose, whisker

logger = logging.getLogger(__name__)


def _agree(name: str, first: Verdict, second: Verdict) -> None:
    if first.is_unknown or second.is_unknown:
        return
    if first.status is not second.status:
        raise CharacterizationDisagreement(
            f"{name}: {first.status.name} ({first.reason}) against {second.status.name} ({second.reason})"
        )


def _certificate(cosmos: Cosmos, *verdicts: Verdict, **kwargs: Any) -> Certificate:
    certificate = Certificate(dims=getattr(cosmos, "dims", None), exact=cosmos.exact, **kwargs)
    for verdict in verdicts:
        certificate = certificate.merge(verdict.certificate)
    return certificate


# -- terminal and initial elements -------------------------------------------------------------


def _element_check(cosmos: Cosmos, t: Any, terminal: bool, budget: Optional[Budget]) -> Verdict:
    K = cosmos
    K.owns_maps(t)
    A = t.target
    bang = K.to_terminal(A)
    if terminal:
        projection = comma(K, K.identity(A), t).p0
        adjunction = find_adjunction(K, bang, t)
        kind = "terminal"
    else:
        projection = comma(K, t, K.identity(A)).p1
        adjunction = find_adjunction(K, t, bang)
        kind = "initial"
    by_comma = check_equivalence_2cat(K, projection, budget)
    if adjunction is None:
        by_adjoint = Verdict.no(f"{label(t)} is not adjoint to {label(bang)}", None, _certificate(K))
    else:
        by_adjoint = Verdict.yes(f"{label(t)} is adjoint to {label(bang)}", adjunction, _certificate(K))
    _agree(f"{kind} element {label(t)}", by_comma, by_adjoint)
    certificate = _certificate(K, by_comma, notes=("routes: comma projection, adjoint to !",))
    if by_comma.is_unknown:
        return Verdict.unknown(by_comma.reason, None, certificate.merge(Certificate(exact=False)))
    if by_comma.is_yes:
        return Verdict.yes(f"{label(t)} is {kind}", by_adjoint.witness, certificate)
    return Verdict.no(f"{label(t)} is not {kind}: the comma projection is not an equivalence", {"element": t}, certificate)


def is_terminal_element(cosmos: Cosmos, t: Any, budget: Optional[Budget] = None) -> Verdict:
    """``p0: A↓t → A`` is an equivalence, cross-checked against ``! ⊣ t``."""
    return _element_check(cosmos, t, True, budget)


def is_initial_element(cosmos: Cosmos, t: Any, budget: Optional[Budget] = None) -> Verdict:
    """``p1: t↓A → A`` is an equivalence, cross-checked against ``t ⊣ !``."""
    return _element_check(cosmos, t, False, budget)


# -- limits and colimits -----------------------------------------------------------------------


def cone_category(cosmos: Cosmos, shape: Any, obj: Any, diagram: Any) -> CommaObject:
    """``Δ↓d``: cones over the element ``d: 1 → A^J``."""
    return comma(cosmos, cosmos.diagonal(shape, obj), diagram)


def cocone_category(cosmos: Cosmos, shape: Any, obj: Any, diagram: Any) -> CommaObject:
    """``d↓Δ``: cocones under ``d``."""
    return comma(cosmos, diagram, cosmos.diagonal(shape, obj))


def _universal_check(
    cosmos: Cosmos,
    ell: Any,
    cones: CommaObject,
    represented: CommaObject,
    limit: bool,
    budget: Optional[Budget],
) -> Verdict:
    K = cosmos
    budget = budget or Budget()
    apex_leg = cones.p0 if limit else cones.p1
    kind = "limit" if limit else "colimit"
    element_check = is_terminal_element if limit else is_initial_element
    found: Optional[Any] = None
    unsure = False
    for x in K.elements(cones.apex):
        if not K.isomorphic(K.compose(apex_leg, x), ell):
            continue
        verdict = element_check(K, x, budget)
        if verdict.is_yes:
            found = x
            break
        unsure = unsure or verdict.is_unknown
    if found is not None:
        by_element = Verdict.yes(f"universal cone at {label(ell)}", cone_at(cones, found), _certificate(K))
    elif unsure:
        by_element = Verdict.unknown("element search inconclusive", None, _certificate(K))
    else:
        by_element = Verdict.no(f"no universal cone has apex {label(ell)}", None, _certificate(K))
    by_equivalence = fibered_equivalence_search(Span.of_comma(represented), Span.of_comma(cones), budget)
    _agree(f"{kind} at {label(ell)}", by_element, by_equivalence)
    certificate = _certificate(
        K, by_element, by_equivalence, notes=("routes: universal element of cones, fibered equivalence",)
    )
    if by_element.is_unknown and by_equivalence.is_unknown:
        return Verdict.unknown(f"{kind} check inconclusive", None, certificate.merge(Certificate(exact=False)))
    decided = by_element if not by_element.is_unknown else by_equivalence
    if decided.is_yes:
        logger.info("%s verified at %s", kind, label(ell))
        return Verdict.yes(f"{label(ell)} is a {kind}", by_element.witness, certificate)
    return Verdict.no(f"{label(ell)} is not a {kind}: {decided.reason}", decided.witness, certificate)


def check_limit(cosmos: Cosmos, shape: Any, diagram: Any, ell: Any, budget: Optional[Budget] = None) -> Verdict:
    """``ℓ`` is a limit of ``d``: ``A↓ℓ ≃ Δ↓d`` over ``1 × A`` and a terminal cone sits over ``ℓ``."""
    K = cosmos
    K.owns_maps(diagram, ell)
    A = ell.target
    return _universal_check(K, ell, cone_category(K, shape, A, diagram), comma(K, K.identity(A), ell), True, budget)


def check_colimit(cosmos: Cosmos, shape: Any, diagram: Any, ell: Any, budget: Optional[Budget] = None) -> Verdict:
    """The dual of :func:`check_limit` by reversing 2-cells."""
    K = cosmos
    K.owns_maps(diagram, ell)
    A = ell.target
    return _universal_check(K, ell, cocone_category(K, shape, A, diagram), comma(K, ell, K.identity(A)), False, budget)


# -- absolute liftings -------------------------------------------------------------------------


@dataclass(frozen=True)
class AbsLiftingData:
    """A lift ``ℓ: C → B`` of ``g: C → A`` through ``f: B → A`` with ``λ: fℓ ⇒ g`` (``g ⇒ fℓ`` for left liftings)."""

    cosmos: Cosmos
    f: Any
    g: Any
    lift: Any
    cell: TwoCell

    def describe(self) -> Dict[str, Any]:
        return {"f": label(self.f), "g": label(self.g), "lift": label(self.lift), "cell": self.cell.describe()}


def _lifting_boundaries(data: AbsLiftingData, right: bool) -> None:
    K = data.cosmos
    K.owns(data.cell)
    f, g, ell = data.f, data.g, data.lift
    if f.target != g.target or ell.source != g.source or ell.target != f.source:
        raise BoundaryMismatch("lifting data does not form a triangle over the cospan")
    expected = (K.compose(f, ell), g) if right else (g, K.compose(f, ell))
    if (data.cell.source, data.cell.target) != expected:
        raise BoundaryMismatch(f"{data.cell.label()} has the wrong boundary for a lifting cell")


def probe_objects(cosmos: Cosmos, extra: Any = None) -> List[Any]:
    """The generalized elements used for for-all-X properties, per ``config.probe_set``."""
    from cosmos.config import config

    K = cosmos
    probes = [K.terminal()]
    if config.probe_set != "minimal":
        probes.append(K.shape(ordinal(1)))
        if extra is not None:
            probes.append(extra)
    unique: List[Any] = []
    for X in probes:
        if X not in unique:
            unique.append(X)
    return unique


def _factorizations(data: AbsLiftingData, right: bool, probes: List[Any], budget: Budget) -> Verdict:
    K = data.cosmos
    f, g, ell, lam = data.f, data.g, data.lift, data.cell
    B, C = f.source, g.source
    for X in probes:
        for b in K.one_cells(X, B):
            for c in K.one_cells(X, C):
                lam_c = whisker(None, lam, c)
                fb, gc, ellc = K.compose(f, b), K.compose(g, c), K.compose(ell, c)
                boundary = (fb, gc) if right else (gc, fb)
                for chi in K.cells(*boundary):
                    budget.spend()
                    if right:
                        factors = [z for z in K.cells(b, ellc) if vcompose(lam_c, whisker(f, z)) == chi]
                    else:
                        factors = [z for z in K.cells(ellc, b) if vcompose(whisker(f, z), lam_c) == chi]
                    if len(factors) != 1:
                        return Verdict.no(
                            f"2-cell factors {len(factors)} times through the lifting cell",
                            {"probe": label(X), "b": b, "c": c, "cell": chi, "factorizations": len(factors)},
                            _certificate(K, probes=(label(X),)),
                        )
    return Verdict.yes("every 2-cell factors uniquely", None, _certificate(K, probes=tuple(label(X) for X in probes)))


def _comparison_route(data: AbsLiftingData, right: bool, budget: Budget) -> Verdict:
    K = data.cosmos
    f, g, ell, lam = data.f, data.g, data.lift, data.cell
    B = f.source
    if right:
        lifted = comma(K, K.identity(B), ell)
        target = comma(K, f, g)
        pasted = vcompose(whisker(None, lam, lifted.p1), whisker(f, lifted.cone))
    else:
        lifted = comma(K, ell, K.identity(B))
        target = comma(K, g, f)
        pasted = vcompose(whisker(f, lifted.cone), whisker(None, lam, lifted.p0))
    w = induce_1cell(target, pasted, lifted.p0, lifted.p1)
    return fibered_equivalence_search(Span.of_comma(lifted), Span.of_comma(target), budget, forward=w)


def _lifting_check(data: AbsLiftingData, right: bool, probes: Optional[List[Any]], budget: Optional[Budget]) -> Verdict:
    _lifting_boundaries(data, right)
    K = data.cosmos
    budget = budget or Budget()
    probes = probes if probes is not None else probe_objects(K, data.g.source)
    kind = "right" if right else "left"
    by_comma = _comparison_route(data, right, budget)
    try:
        by_factoring = _factorizations(data, right, probes, budget)
    except BudgetExhausted:
        by_factoring = Verdict.unknown("factorization budget exhausted", None, budget.certificate(exact=False))
    certificate = _certificate(
        K, by_comma, by_factoring, notes=("routes: comma comparison, direct factorization",)
    )
    if by_factoring.is_no or by_comma.is_unknown:
        if by_comma.is_yes:
            raise CharacterizationDisagreement(f"absolute {kind} lifting: comma route YES, factorization NO")
        if by_factoring.is_no:
            return Verdict.no(f"not an absolute {kind} lifting: {by_factoring.reason}", by_factoring.witness, certificate)
        return Verdict.unknown(by_comma.reason, None, certificate.merge(Certificate(exact=False)))
    if by_comma.is_no and by_factoring.is_yes and K.exact:
        raise CharacterizationDisagreement(f"absolute {kind} lifting: comma route NO, factorization YES")
    if by_comma.is_yes:
        return Verdict.yes(f"absolute {kind} lifting", data, certificate)
    return Verdict.no(f"not an absolute {kind} lifting: {by_comma.reason}", by_comma.witness, certificate)


def check_absolute_right_lifting(
    data: AbsLiftingData, probes: Optional[List[Any]] = None, budget: Optional[Budget] = None
) -> Verdict:
    """``B↓ℓ → f↓g`` is a fibered equivalence, and 2-cells ``fb ⇒ gc`` factor uniquely through ``λ``."""
    return _lifting_check(data, True, probes, budget)


def check_absolute_left_lifting(
    data: AbsLiftingData, probes: Optional[List[Any]] = None, budget: Optional[Budget] = None
) -> Verdict:
    return _lifting_check(data, False, probes, budget)


def counit_as_absolute_lifting(adj: AdjunctionData) -> AbsLiftingData:
    """``ε: f u ⇒ id`` displays ``u`` as an absolute right lifting of the identity through ``f``."""
    K = adj.cosmos
    return AbsLiftingData(K, adj.f, K.identity(adj.f.target), adj.u, adj.epsilon)


# -- adjunctions -------------------------------------------------------------------------------


def check_adjunction_via_comma(cosmos: Cosmos, f: Any, u: Any, budget: Optional[Budget] = None) -> Verdict:
    """``f ⊣ u`` iff ``f↓A ≃ B↓u`` over ``A × B``; the unit and counit are read off the equivalence."""
    K = cosmos
    K.owns_maps(f, u)
    B, A = f.source, f.target
    if u.source != A or u.target != B:
        raise BoundaryMismatch(f"{label(f)} and {label(u)} do not point in opposite directions")
    left = comma(K, f, K.identity(A))
    right = comma(K, K.identity(B), u)
    verdict = fibered_equivalence_search(Span.of_comma(left), Span.of_comma(right), budget)
    if not verdict.is_yes:
        return verdict
    w, v = verdict.witness["forward"], verdict.witness["backward"]
    at_b = induce_1cell(left, K.identity_cell(f), K.identity(B), f)
    at_a = induce_1cell(right, K.identity_cell(u), u, K.identity(A))
    eta = cone_at(right, K.compose(w, at_b))
    epsilon = cone_at(left, K.compose(v, at_a))
    adj = AdjunctionData(
        K,
        f,
        u,
        TwoCell(K, K.identity(B), K.compose(u, f), eta.arrow),
        TwoCell(K, K.compose(f, u), K.identity(A), epsilon.arrow),
    )
    triangles = check_adjunction(adj)
    if not triangles.is_yes:
        raise CharacterizationDisagreement(f"unit and counit read off {label(f)}↓A ≃ B↓{label(u)} fail: {triangles.reason}")
    return Verdict.yes("fibered equivalence of commas with verified unit and counit", adj, verdict.certificate)


def check_right_adjoint_preserves_limit(adj: AdjunctionData, shape: Any, diagram: Any, ell: Any) -> Verdict:
    """``u ℓ`` is a limit of ``u^J d`` whenever ``ℓ`` is a limit of ``d``."""
    K = adj.cosmos
    transported = K.compose(K.cotensor_map(shape, adj.u), diagram)
    return check_limit(K, shape, transported, K.compose(adj.u, ell))


def is_groupoidal(cosmos: Cosmos, obj: Any, probes: Optional[List[Any]] = None) -> Verdict:
    """Every 2-cell into ``obj`` is invertible: the hom-categories from the probes are groupoids."""
    K = cosmos
    probes = probes if probes is not None else probe_objects(K)
    for X in probes:
        hom = K.hom(X, obj)
        for a in hom.arrows:
            if not hom.is_iso(a):
                return Verdict.no(
                    "non-invertible 2-cell",
                    {"probe": label(X), "cell": label(a)},
                    _certificate(K, probes=(label(X),)),
                )
    return Verdict.yes("hom-categories are groupoids", None, _certificate(K, probes=tuple(label(X) for X in probes)))
