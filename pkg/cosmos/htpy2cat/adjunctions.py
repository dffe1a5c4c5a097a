"""Adjunctions and equivalences in a homotopy 2-category, checked by the triangle identities."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from cosmos.cat.category import CatFunctor, NatTransform, compose_functors, identity_functor, label
from cosmos.core.base import TwoCategory, TwoCell
from cosmos.core.errors import BoundaryMismatch, BudgetExhausted, InputError, InstanceMismatch
from cosmos.core.models import Budget, Certificate, Verdict
from cosmos.htpy2cat.cells import inverse, is_invertible, vcompose, whisker

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdjunctionData:
    """``f ⊣ u`` with ``f: B → A``, ``u: A → B``, ``η: id_B ⇒ u f`` and ``ε: f u ⇒ id_A``."""

    cosmos: TwoCategory
    f: Any
    u: Any
    eta: TwoCell
    epsilon: TwoCell

    def describe(self) -> Dict[str, Any]:
        return {
            "left": label(self.f),
            "right": label(self.u),
            "unit": self.eta.describe(),
            "counit": self.epsilon.describe(),
        }


def _certificate(cosmos: TwoCategory, **kwargs: Any) -> Certificate:
    return Certificate(dims=getattr(cosmos, "dims", None), **kwargs)


def check_boundaries(adj: AdjunctionData) -> None:
    """Raise :class:`BoundaryMismatch` unless η and ε have the adjunction boundaries."""
    K, f, u = adj.cosmos, adj.f, adj.u
    if adj.eta.cosmos is not K or adj.epsilon.cosmos is not K:
        raise InstanceMismatch("adjunction data from different cosmos instances")
    if u.source != f.target or u.target != f.source:
        raise BoundaryMismatch(f"{label(f)} and {label(u)} do not point in opposite directions")
    if adj.eta.source != K.identity(f.source) or adj.eta.target != K.compose(u, f):
        raise BoundaryMismatch(f"unit {adj.eta.label()} is not a 2-cell id ⇒ u f")
    if adj.epsilon.source != K.compose(f, u) or adj.epsilon.target != K.identity(f.target):
        raise BoundaryMismatch(f"counit {adj.epsilon.label()} is not a 2-cell f u ⇒ id")


def triangle_composites(adj: AdjunctionData) -> Tuple[TwoCell, TwoCell]:
    """``(εf · fη, uε · ηu)``."""
    f, u, eta, epsilon = adj.f, adj.u, adj.eta, adj.epsilon
    left = vcompose(whisker(None, epsilon, f), whisker(f, eta))
    right = vcompose(whisker(u, epsilon), whisker(None, eta, u))
    return left, right


def check_adjunction(adj: AdjunctionData) -> Verdict:
    """YES iff both triangle identities hold under 2-cell equality."""
    check_boundaries(adj)
    K = adj.cosmos
    left, right = triangle_composites(adj)
    certificate = _certificate(K)
    if left != K.identity_cell(adj.f):
        return Verdict.no("εf · fη is not the identity on f", {"triangle": "left", "composite": left}, certificate)
    if right != K.identity_cell(adj.u):
        return Verdict.no("uε · ηu is not the identity on u", {"triangle": "right", "composite": right}, certificate)
    logger.info("verified adjunction %s ⊣ %s", label(adj.f), label(adj.u))
    return Verdict.yes("triangle identities hold", adj, certificate)


def find_adjunction(cosmos: TwoCategory, f: Any, u: Any) -> Optional[AdjunctionData]:
    """The least unit and counit making ``f ⊣ u``, if any."""
    K = cosmos
    for eta in K.cells(K.identity(f.source), K.compose(u, f)):
        for epsilon in K.cells(K.compose(f, u), K.identity(f.target)):
            adj = AdjunctionData(K, f, u, eta, epsilon)
            if check_adjunction(adj).is_yes:
                return adj
    return None


def compose_adjunctions(first: AdjunctionData, second: AdjunctionData) -> AdjunctionData:
    """``f′f ⊣ uu′`` from ``f ⊣ u`` (``f: B → A``) and ``f′ ⊣ u′`` (``f′: A → C``)."""
    K = first.cosmos
    if second.cosmos is not K:
        raise InstanceMismatch("adjunctions from different cosmos instances")
    if first.f.target != second.f.source:
        raise BoundaryMismatch(f"cannot compose {label(second.f)} after {label(first.f)}")
    f, u = first.f, first.u
    f2, u2 = second.f, second.u
    eta = vcompose(whisker(u, second.eta, f), first.eta)
    epsilon = vcompose(second.epsilon, whisker(f2, first.epsilon, u2))
    return AdjunctionData(K, K.compose(f2, f), K.compose(u, u2), eta, epsilon)


def promote_to_adjoint_equivalence(cosmos: TwoCategory, f: Any, g: Any, eta: TwoCell, epsilon: TwoCell) -> AdjunctionData:
    """Replace ε by ``ε · fη⁻¹g · ε⁻¹fg`` so that the triangle identities hold."""
    if not is_invertible(eta) or not is_invertible(epsilon):
        raise InputError("promotion needs invertible unit and counit", law="invertibility")
    adj = AdjunctionData(cosmos, f, g, eta, epsilon)
    if check_adjunction(adj).is_yes:
        return adj
    fg = cosmos.compose(f, g)
    spread = whisker(None, inverse(epsilon), fg)
    squeeze = whisker(f, inverse(eta), g)
    promoted = vcompose(epsilon, vcompose(squeeze, spread))
    logger.debug("promoted counit of %s to %s", label(f), promoted.label())
    return AdjunctionData(cosmos, f, g, eta, promoted)


def check_equivalence_2cat(cosmos: TwoCategory, f: Any, budget: Optional[Budget] = None) -> Verdict:
    """Search ``g`` with invertible ``η: id ⇒ g f`` and ``ε: f g ⇒ id``."""
    K = cosmos
    budget = budget or Budget()
    A, B = f.source, f.target
    try:
        for g in K.one_cells(B, A):
            budget.spend()
            eta = next((c for c in K.cells(K.identity(A), K.compose(g, f)) if K.is_invertible(c)), None)
            if eta is None:
                continue
            epsilon = next((c for c in K.cells(K.compose(f, g), K.identity(B)) if K.is_invertible(c)), None)
            if epsilon is None:
                continue
            certificate = _certificate(K, budget=budget.limit, spent=budget.spent)
            return Verdict.yes("inverse with invertible unit and counit found", {"inverse": g, "unit": eta, "counit": epsilon}, certificate)
    except BudgetExhausted:
        return Verdict.unknown("search budget exhausted", None, budget.certificate(exact=False))
    certificate = _certificate(K, budget=budget.limit, spent=budget.spent)
    return Verdict.no(f"no 1-cell {B.label()} → {A.label()} is an inverse of {label(f)} up to isomorphism", None, certificate)


def equivalence_as_adjunctions(cosmos: TwoCategory, f: Any) -> Tuple[AdjunctionData, AdjunctionData]:
    """Both ``f ⊣ g`` and ``g ⊣ f`` from a verified equivalence."""
    verdict = check_equivalence_2cat(cosmos, f)
    if not verdict.is_yes:
        raise InputError(f"{label(f)} is not an equivalence: {verdict.reason}", law="equivalence")
    g, eta, epsilon = verdict.witness["inverse"], verdict.witness["unit"], verdict.witness["counit"]
    left = promote_to_adjoint_equivalence(cosmos, f, g, eta, epsilon)
    right = AdjunctionData(cosmos, g, f, inverse(left.epsilon), inverse(left.eta))
    return left, right


# -- iso-invariance ----------------------------------------------------------------------


def transport_left_adjoint(adj: AdjunctionData, theta: TwoCell) -> AdjunctionData:
    """Move ``f ⊣ u`` along an invertible ``θ: f ⇒ f′`` to ``f′ ⊣ u``."""
    if theta.source != adj.f or not is_invertible(theta):
        raise BoundaryMismatch("transport needs an invertible 2-cell out of the left adjoint")
    eta = vcompose(whisker(adj.u, theta), adj.eta)
    epsilon = vcompose(adj.epsilon, whisker(None, inverse(theta), adj.u))
    return AdjunctionData(adj.cosmos, theta.target, adj.u, eta, epsilon)


def compare_left_adjoints(first: AdjunctionData, second: AdjunctionData) -> TwoCell:
    """The canonical ``f ⇒ f′`` between two left adjoints of the same ``u``: ``εf′ · fη′``."""
    if first.u != second.u:
        raise BoundaryMismatch("left adjoints of different right adjoints")
    return vcompose(whisker(None, first.epsilon, second.f), whisker(first.f, second.eta))


# -- transport along hom(X, -) and (-)^U -----------------------------------------------------


def _transported(
    cosmos: Any,
    F: CatFunctor,
    U: CatFunctor,
    unit: Dict[Any, Any],
    counit: Dict[Any, Any],
) -> AdjunctionData:
    eta = NatTransform(identity_functor(F.source), compose_functors(U, F), unit)
    epsilon = NatTransform(compose_functors(F, U), identity_functor(F.target), counit)
    return AdjunctionData(cosmos, F, U, cosmos.nat_cell(eta), cosmos.nat_cell(epsilon))


def _components(adj: AdjunctionData, F: CatFunctor, U: CatFunctor) -> Tuple[Dict[Any, Any], Dict[Any, Any]]:
    unit = {b: whisker(None, adj.eta, b).arrow for b in F.source.objects}
    counit = {a: whisker(None, adj.epsilon, a).arrow for a in U.source.objects}
    return unit, counit


def hom_transport(adj: AdjunctionData, probe: Any) -> AdjunctionData:
    """``hom(X, f) ⊣ hom(X, u)`` as an adjunction of hom-categories."""
    from cosmos.cat.cosmos import CatCosmos

    K = adj.cosmos
    F = K.postcompose(adj.f, probe)
    U = K.postcompose(adj.u, probe)
    return _transported(CatCosmos(), F, U, *_components(adj, F, U))


def cotensor_transport(adj: AdjunctionData, shape: Any) -> AdjunctionData:
    """``f^U ⊣ u^U`` between cotensors, inside the instance itself."""
    from cosmos.cat.cosmos import CatCosmos

    K = adj.cosmos
    if not isinstance(K, CatCosmos):
        raise InstanceMismatch("cotensor transport of adjunction data is computed in the Cat instance")
    F = K.cotensor_map(shape, adj.f)
    U = K.cotensor_map(shape, adj.u)
    return _transported(K, F, U, *_components(adj, F, U))


def induced_adjunction_checks(adj: AdjunctionData, probe: Any, mode: str = "hom") -> Verdict:
    """Re-verify the triangle identities after transport along ``hom(X, -)`` or ``(-)^U``."""
    if not check_adjunction(adj).is_yes:
        raise InputError("induced adjunctions need a verified adjunction", law="triangle identities")
    if mode == "hom":
        transported = hom_transport(adj, probe)
    elif mode == "cotensor":
        transported = cotensor_transport(adj, probe)
    else:
        raise InputError(f"unknown transport mode {mode!r}")
    verdict = check_adjunction(transported)
    verdict.certificate = verdict.certificate.merge(Certificate(probes=(label(probe),), notes=(f"transport: {mode}",)))
    return verdict
