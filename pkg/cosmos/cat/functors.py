"""Enumeration of functors and transformations, functor categories and equivalences."""
from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from cosmos.cat.category import (
    Arrow,
    CatFunctor,
    FiniteCategory,
    NatTransform,
    Obj,
    compose_functors,
    identity_functor,
    identity_transformation,
    label,
    vcompose,
)
from cosmos.core.models import Verdict

logger = logging.getLogger(__name__)


def _composition_triples(category: FiniteCategory) -> List[Tuple[Arrow, Arrow, Arrow]]:
    triples = []
    for f in category.arrows:
        if category.is_identity(f):
            continue
        for g in category._after(f):
            if not category.is_identity(g):
                triples.append((g, f, category.compose(g, f)))
    return triples


def iter_functors(
    source: FiniteCategory,
    target: FiniteCategory,
    *,
    on_objects: Optional[Mapping[Obj, Obj]] = None,
) -> Iterator[CatFunctor]:
    """All functors ``source → target`` in canonical order, optionally with fixed object values."""
    fixed = dict(on_objects or {})
    moving = [a for a in source.arrows if not source.is_identity(a)]
    position = {a: i for i, a in enumerate(moving)}
    checks: Dict[int, List[Tuple[Arrow, Arrow, Arrow]]] = {}
    for g, f, gf in _composition_triples(source):
        last = max(position[g], position[f], position.get(gf, -1))
        checks.setdefault(last, []).append((g, f, gf))
    pools = [[fixed[x]] if x in fixed else list(target.objects) for x in source.objects]
    for values in itertools.product(*pools):
        objects = dict(zip(source.objects, values))
        arrows: Dict[Arrow, Arrow] = {source.identity(x): target.identity(objects[x]) for x in source.objects}

        def image(a: Arrow) -> Arrow:
            return arrows[a]

        def extend(i: int) -> Iterator[Dict[Arrow, Arrow]]:
            if i == len(moving):
                yield arrows
                return
            a = moving[i]
            for b in target.hom(objects[source.src(a)], objects[source.tgt(a)]):
                arrows[a] = b
                if all(image(gf) == target.compose(image(g), image(f)) for g, f, gf in checks.get(i, ())):
                    yield from extend(i + 1)
            arrows.pop(a, None)

        for assignment in extend(0):
            yield CatFunctor(source, target, objects, dict(assignment))


def iter_transformations(source: CatFunctor, target: CatFunctor) -> Iterator[NatTransform]:
    """All natural transformations ``source ⇒ target`` in canonical order."""
    A, B = source.source, source.target
    objects = list(A.objects)
    position = {x: i for i, x in enumerate(objects)}
    checks: Dict[int, List[Arrow]] = {}
    for a in A.arrows:
        if not A.is_identity(a):
            checks.setdefault(max(position[A.src(a)], position[A.tgt(a)]), []).append(a)
    components: Dict[Obj, Arrow] = {}

    def natural(a: Arrow) -> bool:
        x, y = A.ends(a)
        return B.compose(components[y], source.arrow(a)) == B.compose(target.arrow(a), components[x])

    def extend(i: int) -> Iterator[Dict[Obj, Arrow]]:
        if i == len(objects):
            yield components
            return
        x = objects[i]
        for c in B.hom(source(x), target(x)):
            components[x] = c
            if all(natural(a) for a in checks.get(i, ())):
                yield from extend(i + 1)
        components.pop(x, None)

    for found in extend(0):
        yield NatTransform(source, target, dict(found))


@lru_cache(maxsize=256)
def functor_category(source: FiniteCategory, target: FiniteCategory) -> FiniteCategory:
    """The category of functors ``source → target`` and natural transformations."""
    functors = list(iter_functors(source, target))
    arrows: Dict[NatTransform, Tuple[CatFunctor, CatFunctor]] = {}
    identities = {F: identity_transformation(F) for F in functors}
    for F in functors:
        arrows[identities[F]] = (F, F)
    for F, G in itertools.product(functors, repeat=2):
        for alpha in iter_transformations(F, G):
            arrows.setdefault(alpha, (F, G))
    logger.debug("functor category %s → %s: %d objects, %d arrows", source.label(), target.label(), len(functors), len(arrows))
    return FiniteCategory(
        functors,
        arrows,
        identities,
        lambda beta, alpha: vcompose(beta, alpha),
        name=f"Fun({source.label()}, {target.label()})",
    )


# -- equivalences -----------------------------------------------------------------------


def is_fully_faithful(functor: CatFunctor) -> Optional[Tuple[Obj, Obj]]:
    """The first pair of objects on which the functor is not bijective on homs, if any."""
    A, B = functor.source, functor.target
    for x, y in itertools.product(A.objects, repeat=2):
        images = [functor.arrow(a) for a in A.hom(x, y)]
        if len(set(images)) != len(images) or len(images) != len(B.hom(functor(x), functor(y))):
            return x, y
    return None


def is_essentially_surjective(functor: CatFunctor) -> Optional[Obj]:
    """The first object not isomorphic to an image, if any."""
    B = functor.target
    images = {functor(x) for x in functor.source.objects}
    for b in B.objects:
        if not any(B.isomorphic(y, b) for y in images):
            return b
    return None


def is_equivalence(functor: CatFunctor) -> Verdict:
    """Exact decision: full faithfulness plus essential surjectivity."""
    pair = is_fully_faithful(functor)
    if pair is not None:
        x, y = pair
        return Verdict.no(f"not fully faithful on hom({label(x)}, {label(y)})", {"objects": [label(x), label(y)]})
    missing = is_essentially_surjective(functor)
    if missing is not None:
        return Verdict.no(f"object {label(missing)} is not in the essential image", {"object": label(missing)})
    return Verdict.yes("fully faithful and essentially surjective", find_pseudo_inverse(functor))


def find_pseudo_inverse(functor: CatFunctor) -> Optional[Tuple[CatFunctor, NatTransform, NatTransform]]:
    """``(g, η: id ⇒ g f, ε: f g ⇒ id)`` with invertible η, ε for an equivalence ``f``."""

    A, B = functor.source, functor.target
    if is_fully_faithful(functor) is not None or is_essentially_surjective(functor) is not None:
        return None
    choice: Dict[Obj, Obj] = {}
    iso: Dict[Obj, Arrow] = {}
    for b in B.objects:
        for x in A.objects:
            found = next((c for c in B.hom(functor(x), b) if B.is_iso(c)), None)
            if found is not None:
                choice[b], iso[b] = x, found
                break

    def preimage(x: Obj, y: Obj, target_arrow: Arrow) -> Arrow:
        return next(a for a in A.hom(x, y) if functor.arrow(a) == target_arrow)

    on_arrows = {}
    for k in B.arrows:
        b, c = B.ends(k)
        wanted = B.compose(B.inverse(iso[c]), B.compose(k, iso[b]))
        on_arrows[k] = preimage(choice[b], choice[c], wanted)
    inverse = CatFunctor(B, A, choice, on_arrows, name=f"{functor.name}⁻¹" if functor.name else "")
    gf = compose_functors(inverse, functor)
    fg = compose_functors(functor, inverse)
    eta = NatTransform(
        identity_functor(A),
        gf,
        {x: preimage(x, gf(x), B.inverse(iso[functor(x)])) for x in A.objects},
    )
    epsilon = NatTransform(fg, identity_functor(B), {b: iso[b] for b in B.objects})
    return inverse, eta, epsilon


def is_isomorphism(functor: CatFunctor) -> bool:
    A, B = functor.source, functor.target
    return (
        len(set(functor.on_objects.values())) == len(B.objects) == len(A.objects)
        and len(set(functor.on_arrows.values())) == len(B.arrows) == len(A.arrows)
    )


def find_isomorphism(source: FiniteCategory, target: FiniteCategory) -> Optional[CatFunctor]:
    """An isomorphism of categories, searched in canonical order."""
    if len(source.objects) != len(target.objects) or len(source.arrows) != len(target.arrows):
        return None
    for values in itertools.permutations(target.objects):
        objects = dict(zip(source.objects, values))
        if any(len(source.hom(x, y)) != len(target.hom(objects[x], objects[y])) for x in source.objects for y in source.objects):
            continue
        for functor in iter_functors(source, target, on_objects=objects):
            if is_isomorphism(functor):
                return functor
    return None


# -- adjoints from universal arrows ------------------------------------------------------


def right_adjoint(left: CatFunctor) -> Optional[Tuple[CatFunctor, NatTransform, NatTransform]]:
    """``(u, η, ε)`` with ``left ⊣ u`` built from terminal objects of each ``left↓a``."""

    B, A = left.source, left.target
    choice: Dict[Obj, Obj] = {}
    counit: Dict[Obj, Arrow] = {}
    for a in A.objects:
        universal = _terminal_arrow(left, a)
        if universal is None:
            return None
        choice[a], counit[a] = universal

    def factor(b: Obj, a: Obj, arrow: Arrow) -> Arrow:
        return next(k for k in B.hom(b, choice[a]) if A.compose(counit[a], left.arrow(k)) == arrow)

    on_arrows = {h: factor(choice[A.src(h)], A.tgt(h), A.compose(h, counit[A.src(h)])) for h in A.arrows}
    right = CatFunctor(A, B, choice, on_arrows)
    uf = compose_functors(right, left)
    eta = NatTransform(identity_functor(B), uf, {b: factor(b, left(b), A.identity(left(b))) for b in B.objects})
    epsilon = NatTransform(compose_functors(left, right), identity_functor(A), counit)
    return right, eta, epsilon


def _terminal_arrow(left: CatFunctor, a: Obj) -> Optional[Tuple[Obj, Arrow]]:
    B, A = left.source, left.target
    for b in B.objects:
        for e in A.hom(left(b), a):
            if all(
                sum(1 for k in B.hom(b2, b) if A.compose(e, left.arrow(k)) == h) == 1
                for b2 in B.objects
                for h in A.hom(left(b2), a)
            ):
                return b, e
    return None


def opposite_functor(functor: CatFunctor) -> CatFunctor:
    return CatFunctor(
        functor.source.opposite(),
        functor.target.opposite(),
        functor.on_objects,
        functor.on_arrows,
        name=f"{functor.name}^op" if functor.name else "",
    )


def left_adjoint(right: CatFunctor) -> Optional[Tuple[CatFunctor, NatTransform, NatTransform]]:
    """``(f, η, ε)`` with ``f ⊣ right``, by dualizing :func:`right_adjoint`."""

    found = right_adjoint(opposite_functor(right))
    if found is None:
        return None
    left_op, eta_op, epsilon_op = found
    A, B = right.source, right.target
    left = CatFunctor(B, A, left_op.on_objects, left_op.on_arrows)
    eta = NatTransform(identity_functor(B), compose_functors(right, left), epsilon_op.components)
    epsilon = NatTransform(compose_functors(left, right), identity_functor(A), eta_op.components)
    return left, eta, epsilon
