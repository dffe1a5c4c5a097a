"""Right extensions of modules and pointwise Kan extensions of functors."""
from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Tuple

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
    vcompose,
    whisker_right,
)
from cosmos.cat.constructions import comma_cat_oracle
from cosmos.cat.functors import iter_functors, iter_transformations, opposite_functor
from cosmos.cat.limits import factor, limit_oracle
from cosmos.core.errors import BoundaryMismatch, CharacterizationDisagreement, LimitMissing
from cosmos.core.models import Certificate, Verdict
from cosmos.equipment.cells import Cell, Frame, compose_cells, enumerate_cells, identity_cell, module_sequences, solve_assignments
from cosmos.equipment.modules import Element, Profunctor, companion, unit_module
from cosmos.runtime import get_cat_cosmos

logger = logging.getLogger(__name__)


def right_extension_of_modules(F: Profunctor, K: Profunctor) -> Tuple[Profunctor, Cell]:
    """``R: B ↛ C`` with ``R(b, c)`` the natural families ``K(-, b) → F(-, c)``, and the evaluation cell ``ν: (K, R) ⇒ F``."""
    if F.source != K.source:
        raise BoundaryMismatch(f"{F.label()} and {K.label()} do not start at the same category")
    A, B, C = K.source, K.target, F.target
    over: Dict[Obj, List[Element]] = {b: [x for x in K.elements() if x[1] == b] for b in B.objects}
    table: Dict[Tuple[Obj, Obj], List[Tuple]] = {}
    for b in B.objects:
        keys = over[b]
        constraints = [
            (K.left(u, x), lambda y: y, x, lambda y, u=u: F.left(u, y))
            for x in keys
            for u in A.arrows
            if A.src(u) == x[0] and not A.is_identity(u)
        ]
        for c in C.objects:
            domains = {x: F(x[0], c) for x in keys}
            table[(b, c)] = [tuple((x, family[x]) for x in keys) for family in solve_assignments(keys, domains, constraints)]

    def left(v: Arrow, phi: Element) -> Element:
        values = dict(phi[2])
        b2 = B.tgt(v)
        return (b2, phi[1], tuple((x, values[K.right(x, v)]) for x in over[b2]))

    def right(phi: Element, w: Arrow) -> Element:
        return (phi[0], C.src(w), tuple((x, F.right(y, w)) for x, y in phi[2]))

    R = Profunctor(B, C, table, left, right, name=f"Ran_{K.label()} {F.label()}")
    frame = Frame((K, R), F, identity_functor(A), identity_functor(C))
    nu = Cell(frame, tuple((key, dict(key[1][1][2])[key[1][0]]) for key in frame.tuples()))
    logger.debug("right extension of %s along %s has sizes %s", F.label(), K.label(), R.sizes())
    return R, nu


def check_right_extension_of_modules(
    nu: Cell,
    modules: Optional[Sequence[Profunctor]] = None,
    max_arity: int = 2,
) -> Verdict:
    """Cells ``S ⇒ R`` correspond to cells ``(K, S) ⇒ F`` by composing with ``ν``."""
    K, R = nu.frame.sources
    B, C = R.source, R.target
    modules = tuple(modules) if modules is not None else (R, unit_module(B), unit_module(C))
    certificate = Certificate(exact=True, bound=max_arity, probes=tuple(m.label() for m in modules))
    checked = 0
    for sequence, base in module_sequences(modules, (B,) if B == C else (), max_arity):
        start = sequence[0].source if sequence else base
        end = sequence[-1].target if sequence else base
        if start != B or end != C:
            continue
        left = Frame(sequence, R, identity_functor(B), identity_functor(C), base)
        images = [compose_cells(nu, [identity_cell(K), theta]) for theta in enumerate_cells(left)]
        right = set(enumerate_cells(Frame((K,) + sequence, nu.frame.target, identity_functor(K.source), identity_functor(C))))
        checked += len(right)
        if len(set(images)) != len(images) or set(images) != right:
            return Verdict.no(
                "composing with the evaluation cell is not a bijection",
                {"sources": [m.label() for m in sequence], "cells": len(images), "targets": len(right)},
                certificate,
            )
    return Verdict.yes(f"bijection on {checked} cells", None, certificate)


# -- extensions in the homotopy 2-category -------------------------------------------------------


def check_right_extension_2cat(r: CatFunctor, nu: NatTransform, f: CatFunctor, k: CatFunctor) -> Verdict:
    """``(r, ν: r k ⇒ f)`` is a right extension of ``f`` along ``k``: every ``γ: g k ⇒ f`` is ``ν · δk`` for a unique ``δ``."""
    if nu.source != compose_functors(r, k) or nu.target != f:
        raise BoundaryMismatch("ν is not a 2-cell r k ⇒ f")
    certificate = Certificate(exact=True)
    for g in iter_functors(k.target, f.target):
        for gamma in iter_transformations(compose_functors(g, k), f):
            found = [delta for delta in iter_transformations(g, r) if vcompose(nu, whisker_right(delta, k)) == gamma]
            if len(found) != 1:
                return Verdict.no(
                    f"a 2-cell into {f.label()} factors {len(found)} times",
                    {"functor": g, "cell": gamma, "factorizations": len(found)},
                    certificate,
                )
    return Verdict.yes("every 2-cell factors uniquely", None, certificate)


def check_left_extension_2cat(l: CatFunctor, lam: NatTransform, f: CatFunctor, k: CatFunctor) -> Verdict:
    """``(l, λ: f ⇒ l k)``: every ``γ: f ⇒ g k`` is ``δk · λ`` for a unique ``δ: l ⇒ g``."""
    if lam.source != f or lam.target != compose_functors(l, k):
        raise BoundaryMismatch("λ is not a 2-cell f ⇒ l k")
    certificate = Certificate(exact=True)
    for g in iter_functors(k.target, f.target):
        for gamma in iter_transformations(f, compose_functors(g, k)):
            found = [delta for delta in iter_transformations(l, g) if vcompose(whisker_right(delta, k), lam) == gamma]
            if len(found) != 1:
                return Verdict.no(
                    f"a 2-cell out of {f.label()} factors {len(found)} times",
                    {"functor": g, "cell": gamma, "factorizations": len(found)},
                    certificate,
                )
    return Verdict.yes("every 2-cell factors uniquely", None, certificate)


# -- pointwise extensions -------------------------------------------------------------------------


def _under(k: CatFunctor, b: Obj) -> Tuple[FiniteCategory, CatFunctor]:
    """``b↓k`` with its projection to the domain of ``k``."""
    category, to_domain, _, _ = comma_cat_oracle(get_cat_cosmos().element(k.target, b), k)
    return category, to_domain


def pointwise_ran(k: CatFunctor, f: CatFunctor) -> Tuple[CatFunctor, NatTransform]:
    """``r(b) = lim(b↓k → A → C)`` with ``ν_a`` the limit leg at ``(a, id_{k a})``; raises :class:`LimitMissing`."""
    if k.source != f.source:
        raise BoundaryMismatch(f"{k.label()} and {f.label()} do not share a domain")
    A, B, C = k.source, k.target, f.target
    limits: Dict[Obj, Tuple[FiniteCategory, CatFunctor, Obj, NatTransform]] = {}
    for b in B.objects:
        J, to_domain = _under(k, b)
        diagram = compose_functors(f, to_domain)
        found = limit_oracle(diagram)
        if found is None:
            raise LimitMissing(b)
        limits[b] = (J, diagram, *found)
    on_arrows: Dict[Arrow, Arrow] = {}
    for v in B.arrows:
        b, b2 = B.ends(v)
        _, _, apex, cone = limits[b]
        J2, diagram2, apex2, cone2 = limits[b2]
        if not J2.objects:
            on_arrows[v] = C.hom(apex, apex2)[0]
            continue
        other = NatTransform(
            constant_functor(J2, C, apex),
            diagram2,
            {x: cone[(x[0], x[1], B.compose(x[2], v))] for x in J2.objects},
        )
        on_arrows[v] = factor(diagram2, cone2, other)[0]
    r = CatFunctor(B, C, {b: limits[b][2] for b in B.objects}, on_arrows, name=f"Ran_{k.label()} {f.label()}").validate()
    point = get_cat_cosmos().terminal().objects[0]
    nu = NatTransform(
        compose_functors(r, k),
        f,
        {a: limits[k(a)][3][(a, point, B.identity(k(a)))] for a in A.objects},
    )
    verdict = certify_pointwise_ran(k, f, r, nu)
    if not verdict.is_yes:
        raise CharacterizationDisagreement(f"pointwise right extension failed certification: {verdict.reason}")
    logger.info("pointwise right extension of %s along %s certified", f.label(), k.label())
    return r, nu


def _pasting_route(k: CatFunctor, f: CatFunctor, r: CatFunctor, nu: NatTransform) -> Verdict:
    K = get_cat_cosmos()
    B, C = k.target, f.target
    for b in B.objects:
        J, to_domain = _under(k, b)
        bang = K.to_terminal(J)
        at_b = K.element(C, r(b))
        pasted = NatTransform(
            compose_functors(at_b, bang),
            compose_functors(f, to_domain),
            {x: C.compose(nu[x[0]], r.arrow(x[2])) for x in J.objects},
        )
        verdict = check_right_extension_2cat(at_b, pasted, compose_functors(f, to_domain), bang)
        if verdict.is_no:
            return Verdict.no(f"not a limit at {label(b)}: {verdict.reason}", {"object": b}, verdict.certificate)
    return Verdict.yes("stable under pasting with comma squares", None, Certificate(exact=True))


def _module_route(k: CatFunctor, f: CatFunctor, r: CatFunctor, nu: NatTransform) -> Verdict:
    B, C = k.target, f.target
    along, into = companion(k), companion(f)
    R, _ = right_extension_of_modules(into, along)
    represented = companion(r)
    for b in B.objects:
        keys = [x for x in along.elements() if x[1] == b]
        for c in C.objects:
            images = [
                (b, c, tuple((x, (x[0], c, C.compose(nu[x[0]], C.compose(r.arrow(x[2]), h[2])))) for x in keys))
                for h in represented(b, c)
            ]
            if len(set(images)) != len(images) or set(images) != set(R(b, c)):
                return Verdict.no(
                    f"hom({label(c)}, r {label(b)}) is not the right extension of modules",
                    {"object": b, "probe": c},
                    Certificate(exact=True),
                )
    return Verdict.yes("companion of r is the right extension of companions", None, Certificate(exact=True))


def certify_pointwise_ran(k: CatFunctor, f: CatFunctor, r: CatFunctor, nu: NatTransform) -> Verdict:
    """Both certification routes must agree."""
    by_pasting = _pasting_route(k, f, r, nu)
    by_modules = _module_route(k, f, r, nu)
    if by_pasting.status is not by_modules.status:
        raise CharacterizationDisagreement(
            f"pasting route {by_pasting.status.name} ({by_pasting.reason}) against "
            f"module route {by_modules.status.name} ({by_modules.reason})"
        )
    certificate = Certificate(exact=True, notes=("routes: comma pasting, module extension",))
    if by_pasting.is_no:
        return Verdict.no(by_pasting.reason, by_pasting.witness, certificate)
    return Verdict.yes("pointwise right extension", None, certificate)


def pointwise_lan(k: CatFunctor, f: CatFunctor) -> Tuple[CatFunctor, NatTransform]:
    """``l(b) = colim(k↓b → A → C)``, computed as a right extension between opposites."""
    r, nu = pointwise_ran(opposite_functor(k), opposite_functor(f))
    l = CatFunctor(k.target, f.target, r.on_objects, r.on_arrows, name=f"Lan_{k.label()} {f.label()}")
    lam = NatTransform(f, compose_functors(l, k), nu.components)
    return l, lam
