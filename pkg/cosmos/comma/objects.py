"""Comma objects as pullbacks of arrow objects, with their weak universal property."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict

from cosmos.cat.category import CatFunctor, label
from cosmos.cat.constructions import comma_cat_oracle
from cosmos.cat.functors import is_isomorphism
from cosmos.core.base import Cosmos, LimitCone, TwoCell
from cosmos.core.errors import BoundaryMismatch, CharacterizationDisagreement, InputError
from cosmos.core.models import Certificate, Verdict
from cosmos.htpy2cat.cells import vcompose, whisker
from cosmos.htpy2cat.smothering import check_smothering

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CommaObject:
    """``f↓g`` for ``f: B → A`` and ``g: C → A``, with legs ``p1: f↓g → C``, ``p0: f↓g → B``
    and cone ``φ: f p0 ⇒ g p1``."""

    cosmos: Cosmos
    f: Any
    g: Any
    apex: Any
    p1: Any
    p0: Any
    cone: TwoCell
    cone_map: Any
    limit: LimitCone

    @property
    def legs(self) -> Any:
        """``(p1, p0): f↓g → C × B``."""
        return self.limit.legs[1]

    def describe(self) -> Dict[str, Any]:
        return {"f": label(self.f), "g": label(self.g), "apex": label(self.apex), "cone": self.cone.describe()}


def comma(cosmos: Cosmos, f: Any, g: Any) -> CommaObject:
    """The pullback of ``(ev1, ev0): A^𝟚 → A × A`` along ``g × f``."""
    K = cosmos
    K.owns_maps(f, g)
    if f.target != g.target:
        raise BoundaryMismatch(f"{label(f)} and {label(g)} do not form a cospan")
    A = f.target
    arrows = K.arrow_object(A)
    ends = K.product(A, A).pair(arrows.ev1, arrows.ev0)
    limit = K.pullback(ends, K.product_map(g, f))
    to_arrows, to_base = limit.legs
    base = K.product(g.source, f.source)
    p1 = K.compose(base.legs[0], to_base)
    p0 = K.compose(base.legs[1], to_base)
    encoded = K.cotensor_cell(to_arrows)
    cone = TwoCell(K, K.compose(f, p0), K.compose(g, p1), encoded.arrow)
    result = CommaObject(K, f, g, limit.apex, p1, p0, cone, to_arrows, limit)
    if K.exact:
        _agrees_with_oracle(result)
    logger.debug("comma %s↓%s built with apex %s", label(f), label(g), label(limit.apex))
    return result


def _agrees_with_oracle(result: CommaObject) -> None:
    """Compare the pullback with the direct triple construction through the evident bijection."""
    oracle, q1, q0, cone = comma_cat_oracle(result.f, result.g)
    apex = result.apex
    on_objects = {x: (x[1][0], x[1][1], x[0]) for x in apex.objects}
    on_arrows = {a: (a[1][0], a[1][1], a[0][2], a[0][3]) for a in apex.arrows}
    if any(not oracle.has_object(y) for y in on_objects.values()) or any(
        not oracle.has_arrow(b) for b in on_arrows.values()
    ):
        raise CharacterizationDisagreement(f"comma {result.describe()} has cells outside the direct construction")
    comparison = CatFunctor(apex, oracle, on_objects, on_arrows)
    if not is_isomorphism(comparison):
        raise CharacterizationDisagreement(f"comma {result.describe()} differs from the direct construction")
    if any(cone[on_objects[x]] != result.cone.arrow[x] for x in apex.objects):
        raise CharacterizationDisagreement("comma cone differs from the direct construction")


def induce_1cell(comma_object: CommaObject, alpha: TwoCell, b: Any, c: Any) -> Any:
    """The 1-cell ``a: X → f↓g`` with ``p0 a = b``, ``p1 a = c`` and ``φ a = α``."""
    K = comma_object.cosmos
    K.owns(alpha)
    f, g = comma_object.f, comma_object.g
    if alpha.source != K.compose(f, b) or alpha.target != K.compose(g, c):
        raise BoundaryMismatch(f"{alpha.label()} is not a 2-cell f b ⇒ g c")
    encoded = K.cell_as_cotensor(alpha)
    base = K.product(g.source, f.source)
    return comma_object.limit.pair(encoded, base.pair(c, b))


def cone_at(comma_object: CommaObject, a: Any) -> TwoCell:
    """``φ a: f p0 a ⇒ g p1 a``."""
    return whisker(None, comma_object.cone, a)


def induce_2cell(comma_object: CommaObject, a: Any, a2: Any, tau0: TwoCell, tau1: TwoCell) -> TwoCell:
    """The least ``τ: a ⇒ a′`` with ``p0 τ = τ0`` and ``p1 τ = τ1``."""
    K = comma_object.cosmos
    p0, p1, f, g = comma_object.p0, comma_object.p1, comma_object.f, comma_object.g
    if tau0.source != K.compose(p0, a) or tau0.target != K.compose(p0, a2):
        raise BoundaryMismatch(f"{tau0.label()} is not a 2-cell p0 a ⇒ p0 a′")
    if tau1.source != K.compose(p1, a) or tau1.target != K.compose(p1, a2):
        raise BoundaryMismatch(f"{tau1.label()} is not a 2-cell p1 a ⇒ p1 a′")
    left = vcompose(cone_at(comma_object, a2), whisker(f, tau0))
    right = vcompose(whisker(g, tau1), cone_at(comma_object, a))
    if left != right:
        raise InputError("φa′ · fτ0 differs from gτ1 · φa", law="2-cell induction compatibility")
    for tau in K.cells(a, a2):
        if whisker(p0, tau) == tau0 and whisker(p1, tau) == tau1:
            return tau
    raise CharacterizationDisagreement(f"no 2-cell over ({tau1.label()}, {tau0.label()}) in {label(comma_object.apex)}")


def check_comma_conservativity(comma_object: CommaObject, tau: TwoCell) -> Verdict:
    """A 2-cell into the comma whose projections are invertible is itself invertible."""
    K = comma_object.cosmos
    certificate = Certificate(dims=getattr(K, "dims", None), exact=K.exact)
    projections = (whisker(comma_object.p0, tau), whisker(comma_object.p1, tau))
    if not all(K.is_invertible(cell) for cell in projections):
        return Verdict.yes("projections are not both invertible", None, certificate)
    if K.is_invertible(tau):
        return Verdict.yes("invertible with invertible projections", tau, certificate)
    return Verdict.no("invertible projections but the 2-cell is not invertible", {"cell": tau}, certificate)


def smothering_comparison(probe: Any, comma_object: CommaObject) -> CatFunctor:
    """``hom(X, f↓g) → hom(X, f)↓hom(X, g)`` sending ``a`` to ``(p1 a, p0 a, φa)``."""
    K = comma_object.cosmos
    source = K.hom(probe, comma_object.apex)
    F = K.postcompose(comma_object.f, probe)
    G = K.postcompose(comma_object.g, probe)
    target, _, _, _ = comma_cat_oracle(F, G)
    P1 = K.postcompose(comma_object.p1, probe)
    P0 = K.postcompose(comma_object.p0, probe)
    on_objects = {a: (P1(a), P0(a), cone_at(comma_object, a).arrow) for a in source.objects}
    on_arrows = {
        tau: (P1.arrow(tau), P0.arrow(tau), on_objects[source.src(tau)][2], on_objects[source.tgt(tau)][2])
        for tau in source.arrows
    }
    return CatFunctor(source, target, on_objects, on_arrows, name=f"hom({label(probe)}, φ)")


def check_smothering_comparison(probe: Any, comma_object: CommaObject) -> Verdict:
    verdict = check_smothering(smothering_comparison(probe, comma_object))
    K = comma_object.cosmos
    verdict.certificate = verdict.certificate.merge(
        Certificate(dims=getattr(K, "dims", None), probes=(label(probe),))
    )
    return verdict


def hom_space(cosmos: Cosmos, a: Any, a2: Any) -> CommaObject:
    """The hom-space between two elements ``a, a′: 1 → A`` as the comma ``a↓a′``."""
    return comma(cosmos, a, a2)
