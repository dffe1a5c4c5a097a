"""Cartesian, cocartesian and groupoidal fibrations of finite categories, decided along several routes."""
from __future__ import annotations

import logging
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from cosmos.cat.category import (
    Arrow,
    CatFunctor,
    FiniteCategory,
    NatTransform,
    Obj,
    compose_functors,
    constant_functor,
    identity_functor,
    label,
    ordinal,
    terminal_category,
    vcompose,
    whisker_left,
    whisker_right,
)
from cosmos.cat.constructions import arrow_category, comma_cat_oracle
from cosmos.cat.functors import is_equivalence, iter_functors, iter_transformations, opposite_functor
from cosmos.core.base import TwoCell
from cosmos.core.errors import CharacterizationDisagreement
from cosmos.core.models import Certificate, Verdict

logger = logging.getLogger(__name__)


def _certificate(**kwargs: Any) -> Certificate:
    return Certificate(exact=True, **kwargs)


def _unanimous(name: str, routes: Dict[str, Verdict]) -> Verdict:
    statuses = {verdict.status for verdict in routes.values()}
    if len(statuses) != 1:
        summary = ", ".join(f"{route}: {verdict.status.name}" for route, verdict in routes.items())
        raise CharacterizationDisagreement(f"{name} routes disagree ({summary})")
    notes = (f"routes: {', '.join(routes)}",)
    failing = next((v for v in routes.values() if v.is_no), None)
    if failing is not None:
        return Verdict.no(failing.reason, failing.witness, _certificate(notes=notes))
    first = next(iter(routes.values()))
    return Verdict.yes(first.reason, first.witness, _certificate(notes=notes))


# -- cartesian arrows and 2-cells ----------------------------------------------------------------


def is_cartesian_arrow(p: CatFunctor, chi: Arrow) -> bool:
    """Classical p-cartesian arrow: maps into its target over a factorization factor uniquely."""
    E, B = p.source, p.target
    e1, e = E.ends(chi)
    for e2 in E.objects:
        for chi2 in E.hom(e2, e):
            for u in B.hom(p(e2), p(e1)):
                if B.compose(p.arrow(chi), u) != p.arrow(chi2):
                    continue
                found = [psi for psi in E.hom(e2, e1) if p.arrow(psi) == u and E.compose(chi, psi) == chi2]
                if len(found) != 1:
                    return False
    return True


def is_cartesian_2cell(p: CatFunctor, chi: Union[TwoCell, NatTransform]) -> Verdict:
    """Both clauses by enumeration: every compatible pair factors through χ, and χ-fixing vertical endo-cells are invertible."""
    alpha: NatTransform = chi.arrow if isinstance(chi, TwoCell) else chi
    e1, e = alpha.source, alpha.target
    X, E = alpha.domain, alpha.codomain
    p_chi = whisker_left(p, alpha)
    pe1 = compose_functors(p, e1)
    for e2 in iter_functors(X, E):
        pe2 = compose_functors(p, e2)
        below = list(iter_transformations(e2, e1))
        for tau in iter_transformations(e2, e):
            p_tau = whisker_left(p, tau)
            for beta in iter_transformations(pe2, pe1):
                if vcompose(p_chi, beta) != p_tau:
                    continue
                if not any(whisker_left(p, bar) == beta and vcompose(alpha, bar) == tau for bar in below):
                    return Verdict.no(
                        "induction fails",
                        {"clause": "induction", "cell": tau.label(), "over": beta.label()},
                        _certificate(),
                    )
    for gamma in iter_transformations(e1, e1):
        if vcompose(alpha, gamma) == alpha and whisker_left(p, gamma).is_identity() and not gamma.is_invertible():
            return Verdict.no(
                "conservativity fails",
                {"clause": "conservativity", "cell": gamma.label()},
                _certificate(),
            )
    return Verdict.yes("induction and conservativity hold", alpha, _certificate())


# -- helpers shared by the fibration routes -----------------------------------------------------


def _element(category: FiniteCategory, x: Obj) -> CatFunctor:
    return constant_functor(terminal_category(), category, x)


def _terminal_over(functor: CatFunctor, y: Obj, accept: Callable[[Arrow], bool]) -> bool:
    """``functor↓y`` has a terminal object whose structure arrow is accepted."""
    category, _, _, _ = comma_cat_oracle(functor, _element(functor.target, y))
    for candidate in category.objects:
        if not accept(candidate[2]):
            continue
        if all(len(category.hom(z, candidate)) == 1 for z in category.objects):
            return True
    return False


def slice_over_base(p: CatFunctor) -> Tuple[FiniteCategory, CatFunctor]:
    """``B↓p`` with the comparison ``i: E → B↓p``, ``e ↦ (e, pe, id)``."""
    E, B = p.source, p.target
    comma_cat, _, _, _ = comma_cat_oracle(identity_functor(B), p)
    on_objects = {e: (e, p(e), B.identity(p(e))) for e in E.objects}
    on_arrows = {
        a: (a, p.arrow(a), B.identity(p(E.src(a))), B.identity(p(E.tgt(a)))) for a in E.arrows
    }
    return comma_cat, CatFunctor(E, comma_cat, on_objects, on_arrows, name="i")


def arrow_comparison(p: CatFunctor) -> CatFunctor:
    """``k: E^𝟚 → B↓p``, ``χ ↦ (tgt χ, p src χ, pχ)``."""
    E = p.source
    square, _, _ = arrow_category(E)
    comma_cat, _ = slice_over_base(p)
    on_objects = {chi: (E.tgt(chi), p(E.src(chi)), p.arrow(chi)) for chi in square.objects}
    on_arrows = {a: (a[1], p.arrow(a[0]), p.arrow(a[2]), p.arrow(a[3])) for a in square.arrows}
    return CatFunctor(square, comma_cat, on_objects, on_arrows, name="k")


def _lifts(p: CatFunctor, accept: Callable[[Arrow], bool]) -> Optional[Tuple[Obj, Arrow]]:
    """The first ``(e, β: b → pe)`` with no accepted arrow over β ending at e."""
    E, B = p.source, p.target
    for e in E.objects:
        for b in B.objects:
            for beta in B.hom(b, p(e)):
                if not any(p.arrow(chi) == beta and accept(chi) for e1 in E.objects for chi in E.hom(e1, e)):
                    return e, beta
    return None


def _isofibration(p: CatFunctor) -> Verdict:
    from cosmos.cat.cosmos import CatCosmos

    return CatCosmos().is_isofibration(p)


# -- cartesian fibrations ------------------------------------------------------------------------


def _classical_route(p: CatFunctor) -> Verdict:
    missing = _lifts(p, lambda chi: is_cartesian_arrow(p, chi))
    if missing is not None:
        e, beta = missing
        return Verdict.no(
            f"{label(beta)} has no cartesian lift at {label(e)}",
            {"object": label(e), "arrow": label(beta)},
            _certificate(),
        )
    return Verdict.yes("every arrow into the base has a cartesian lift", None, _certificate())


def _generic_lift_route(p: CatFunctor, probes: List[FiniteCategory]) -> Verdict:
    E, B = p.source, p.target
    for X in probes:
        candidates = list(iter_functors(X, E))
        for e in candidates:
            pe = compose_functors(p, e)
            for b in iter_functors(X, B):
                over = [e1 for e1 in candidates if compose_functors(p, e1) == b]
                for beta in iter_transformations(b, pe):
                    lift = next(
                        (
                            chi
                            for e1 in over
                            for chi in iter_transformations(e1, e)
                            if whisker_left(p, chi) == beta and is_cartesian_2cell(p, chi).is_yes
                        ),
                        None,
                    )
                    if lift is None:
                        return Verdict.no(
                            f"no cartesian 2-cell over {beta.label()}",
                            {"probe": X.label(), "cell": beta.label()},
                            _certificate(probes=(X.label(),)),
                        )
                    for x in X.objects:
                        restricted = whisker_right(lift, _element(X, x))
                        if not is_cartesian_2cell(p, restricted).is_yes:
                            return Verdict.no(
                                "cartesian lift not stable under restriction",
                                {"probe": X.label(), "cell": lift.label(), "at": label(x)},
                                _certificate(probes=(X.label(),)),
                            )
    return Verdict.yes(
        "cartesian lifts of 2-cells exist and are stable",
        None,
        _certificate(probes=tuple(X.label() for X in probes)),
    )


def _fibered_adjoint_route(p: CatFunctor) -> Verdict:
    comma_cat, i = slice_over_base(p)
    B = p.target
    for y in comma_cat.objects:
        if not _terminal_over(i, y, lambda arrow: B.is_identity(arrow[1])):
            return Verdict.no(
                "i: E → B↓p has no right adjoint over B",
                {"object": label(y)},
                _certificate(),
            )
    return Verdict.yes("i: E → B↓p has a right adjoint over B", None, _certificate())


def _right_inverse_route(p: CatFunctor) -> Verdict:
    k = arrow_comparison(p)
    comma_cat = k.target
    for y in comma_cat.objects:
        if not _terminal_over(k, y, comma_cat.is_iso):
            return Verdict.no(
                "k: E^𝟚 → B↓p has no right adjoint right inverse",
                {"object": label(y)},
                _certificate(),
            )
    return Verdict.yes("k: E^𝟚 → B↓p has a right adjoint right inverse", None, _certificate())


def _probes() -> List[FiniteCategory]:
    from cosmos.config import config

    probes = [terminal_category()]
    if config.probe_set != "minimal":
        probes.append(ordinal(1))
    return probes


def is_cartesian_fibration(p: CatFunctor) -> Verdict:
    """Generic cartesian lifts, a fibered right adjoint to ``i``, a right adjoint right inverse to ``k``
    and classical cartesian lifts; YES only when all four agree."""
    isofibration = _isofibration(p)
    if isofibration.is_no:
        return Verdict.no(f"not an isofibration: {isofibration.reason}", isofibration.witness, _certificate())
    routes = {
        "cartesian lifts": _generic_lift_route(p, _probes()),
        "fibered adjoint": _fibered_adjoint_route(p),
        "right adjoint right inverse": _right_inverse_route(p),
        "classical": _classical_route(p),
    }
    verdict = _unanimous("cartesian fibration", routes)
    logger.info("cartesian fibration %s: %s", p.label(), verdict.status.name)
    return verdict


def non_invertible_vertical_arrow(p: CatFunctor) -> Optional[Arrow]:
    """The first non-invertible arrow over an identity, or ``None``."""
    E, B = p.source, p.target
    for a in E.arrows:
        if B.is_identity(p.arrow(a)) and not E.is_iso(a):
            return a
    return None


def is_groupoidal_cartesian_fibration(p: CatFunctor) -> Verdict:
    """``k`` is an equivalence, cartesian with groupoid fibers, and the classical discrete criterion."""
    isofibration = _isofibration(p)
    if isofibration.is_no:
        return Verdict.no(f"not an isofibration: {isofibration.reason}", isofibration.witness, _certificate())
    by_equivalence = is_equivalence(arrow_comparison(p))
    classical = _classical_route(p)
    bad = non_invertible_vertical_arrow(p)
    if classical.is_no:
        by_fibers = classical
    elif bad is not None:
        by_fibers = Verdict.no("a fiber is not a groupoid", {"arrow": label(bad)}, _certificate())
    else:
        by_fibers = Verdict.yes("cartesian with groupoid fibers", None, _certificate())
    not_cartesian = next((a for a in p.source.arrows if not is_cartesian_arrow(p, a)), None)
    missing = _lifts(p, lambda chi: True)
    if not_cartesian is not None:
        discrete = Verdict.no("an arrow is not cartesian", {"arrow": label(not_cartesian)}, _certificate())
    elif missing is not None:
        discrete = Verdict.no(
            f"{label(missing[1])} has no lift at {label(missing[0])}",
            {"object": label(missing[0]), "arrow": label(missing[1])},
            _certificate(),
        )
    else:
        discrete = Verdict.yes("every arrow is cartesian and lifts exist", None, _certificate())
    routes = {
        "k is an equivalence": Verdict(by_equivalence.status, by_equivalence.reason, None, _certificate()),
        "groupoid fibers": by_fibers,
        "classical": discrete,
    }
    return _unanimous("groupoidal cartesian fibration", routes)


def is_cocartesian_fibration(p: CatFunctor) -> Verdict:
    """Cartesian fibration of the opposite functor."""
    return is_cartesian_fibration(opposite_functor(p))


def is_groupoidal_cocartesian_fibration(p: CatFunctor) -> Verdict:
    return is_groupoidal_cartesian_fibration(opposite_functor(p))


# -- fibrations in a slice -----------------------------------------------------------------------


def vertical_subcategory(category: FiniteCategory, structure: CatFunctor) -> FiniteCategory:
    """The wide subcategory of arrows sent to identities by ``structure``."""
    base = structure.target
    arrows = {a: category.ends(a) for a in category.arrows if base.is_identity(structure.arrow(a))}
    return FiniteCategory(
        category.objects,
        arrows,
        {x: category.identity(x) for x in category.objects},
        category.compose,
        name=f"{category.label()}_v",
    )


def sliced(functor: CatFunctor, over_source: CatFunctor, over_target: CatFunctor) -> CatFunctor:
    """A 1-cell of Cat/S between ``over_source`` and ``over_target``, restricted to vertical arrows.

    Cartesian and cocartesian fibrations in the slice are the ordinary ones of this restriction.
    """
    source = vertical_subcategory(functor.source, over_source)
    target = vertical_subcategory(functor.target, over_target)
    return CatFunctor(
        source,
        target,
        functor.on_objects,
        {a: functor.arrow(a) for a in source.arrows},
        name=functor.name,
    )
