"""Products, pullbacks, arrow and comma categories, and Grothendieck constructions."""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Dict, Mapping, Sequence, Tuple

from cosmos.cat.category import (
    Arrow,
    CatFunctor,
    FiniteCategory,
    NatTransform,
    Obj,
    compose_functors,
    identity_functor,
    label,
)
from cosmos.core.errors import BoundaryMismatch, InputError


@lru_cache(maxsize=256)
def product_category(*factors: FiniteCategory) -> Tuple[FiniteCategory, Tuple[CatFunctor, ...]]:
    """The product with its projections; objects and arrows are tuples."""
    objects = list(itertools.product(*(c.objects for c in factors)))
    arrows: Dict[Arrow, Tuple[Obj, Obj]] = {}
    for combo in itertools.product(*(c.arrows for c in factors)):
        arrows[combo] = (tuple(c.src(a) for c, a in zip(factors, combo)), tuple(c.tgt(a) for c, a in zip(factors, combo)))
    identities = {x: tuple(c.identity(v) for c, v in zip(factors, x)) for x in objects}
    category = FiniteCategory(
        objects,
        arrows,
        identities,
        lambda g, f: tuple(c.compose(a, b) for c, a, b in zip(factors, g, f)),
        name=" × ".join(c.label() for c in factors),
    )
    legs = tuple(
        CatFunctor(category, c, {x: x[i] for x in objects}, {a: a[i] for a in arrows}, name=f"π{i}")
        for i, c in enumerate(factors)
    )
    return category, legs


def pair_functors(target: FiniteCategory, maps: Sequence[CatFunctor]) -> CatFunctor:
    """The functor into a product or pullback category with the given components."""
    source = maps[0].source
    on_objects = {x: tuple(m(x) for m in maps) for x in source.objects}
    on_arrows = {a: tuple(m.arrow(a) for m in maps) for a in source.arrows}
    for x, value in on_objects.items():
        if not target.has_object(value):
            raise BoundaryMismatch(f"{label(value)} is not an object of {target.label()}")
    return CatFunctor(source, target, on_objects, on_arrows)


def pullback_category(f: CatFunctor, g: CatFunctor) -> Tuple[FiniteCategory, Tuple[CatFunctor, CatFunctor]]:
    """``A ×_C B`` for ``f: A → C`` and ``g: B → C``, with its two legs."""
    if f.target != g.target:
        raise BoundaryMismatch("pullback needs a cospan with a common target")
    A, B = f.source, g.source
    objects = [(a, b) for a in A.objects for b in B.objects if f(a) == g(b)]
    arrows: Dict[Arrow, Tuple[Obj, Obj]] = {}
    for u in A.arrows:
        for v in B.arrows:
            if f.arrow(u) == g.arrow(v):
                arrows[(u, v)] = ((A.src(u), B.src(v)), (A.tgt(u), B.tgt(v)))
    identities = {(a, b): (A.identity(a), B.identity(b)) for a, b in objects}
    category = FiniteCategory(
        objects,
        arrows,
        identities,
        lambda s, t: (A.compose(s[0], t[0]), B.compose(s[1], t[1])),
        name=f"{A.label()} ×_{f.target.label()} {B.label()}",
    )
    legs = (
        CatFunctor(category, A, {x: x[0] for x in objects}, {a: a[0] for a in arrows}),
        CatFunctor(category, B, {x: x[1] for x in objects}, {a: a[1] for a in arrows}),
    )
    return category, legs


def arrow_category(category: FiniteCategory) -> Tuple[FiniteCategory, CatFunctor, CatFunctor]:
    """A^𝟚: objects are arrows of A, arrows are commuting squares ``(u, v, f, f′)``."""
    A = category
    arrows: Dict[Arrow, Tuple[Obj, Obj]] = {}
    for f in A.arrows:
        for f2 in A.arrows:
            for u in A.hom(A.src(f), A.src(f2)):
                for v in A.hom(A.tgt(f), A.tgt(f2)):
                    if A.compose(v, f) == A.compose(f2, u):
                        arrows[(u, v, f, f2)] = (f, f2)
    identities = {f: (A.identity(A.src(f)), A.identity(A.tgt(f)), f, f) for f in A.arrows}

    def compose(s: Tuple, t: Tuple) -> Tuple:
        return (A.compose(s[0], t[0]), A.compose(s[1], t[1]), t[2], s[3])

    square = FiniteCategory(A.arrows, arrows, identities, compose, name=f"{A.label()}^𝟚")
    ev0 = CatFunctor(square, A, {f: A.src(f) for f in A.arrows}, {a: a[0] for a in arrows}, name="ev0")
    ev1 = CatFunctor(square, A, {f: A.tgt(f) for f in A.arrows}, {a: a[1] for a in arrows}, name="ev1")
    return square, ev0, ev1


def comma_cat_oracle(f: CatFunctor, g: CatFunctor) -> Tuple[FiniteCategory, CatFunctor, CatFunctor, NatTransform]:
    """``f↓g`` built directly: objects ``(c, b, α: f b → g c)``.

    Returns the category, the legs ``p1`` (to C) and ``p0`` (to B), and the cone
    ``φ: f p0 ⇒ g p1``.
    """
    if f.target != g.target:
        raise BoundaryMismatch("comma needs a cospan with a common target")
    A, B, C = f.target, f.source, g.source
    objects = [(c, b, alpha) for c in C.objects for b in B.objects for alpha in A.hom(f(b), g(c))]
    arrows: Dict[Arrow, Tuple[Obj, Obj]] = {}
    for (c, b, alpha), (c2, b2, alpha2) in itertools.product(objects, repeat=2):
        for gamma in C.hom(c, c2):
            for beta in B.hom(b, b2):
                if A.compose(g.arrow(gamma), alpha) == A.compose(alpha2, f.arrow(beta)):
                    arrows[(gamma, beta, alpha, alpha2)] = ((c, b, alpha), (c2, b2, alpha2))
    identities = {(c, b, alpha): (C.identity(c), B.identity(b), alpha, alpha) for c, b, alpha in objects}

    def compose(s: Tuple, t: Tuple) -> Tuple:
        return (C.compose(s[0], t[0]), B.compose(s[1], t[1]), t[2], s[3])

    name = f"{f.label()}↓{g.label()}" if f.name and g.name else f"{B.label()}↓{C.label()}"
    comma = FiniteCategory(objects, arrows, identities, compose, name=name)
    p1 = CatFunctor(comma, C, {x: x[0] for x in objects}, {a: a[0] for a in arrows}, name="p1")
    p0 = CatFunctor(comma, B, {x: x[1] for x in objects}, {a: a[1] for a in arrows}, name="p0")
    cone = NatTransform(compose_functors(f, p0), compose_functors(g, p1), {x: x[2] for x in objects})
    return comma, p1, p0, cone


def grothendieck_construction(
    base: FiniteCategory,
    fibers: Mapping[Obj, FiniteCategory],
    reindex: Mapping[Arrow, CatFunctor],
    name: str = "",
) -> Tuple[FiniteCategory, CatFunctor]:
    """∫F for a strict functor ``F: base^op → Cat``; returns the total category and its projection.

    ``reindex[u]`` for ``u: b → b′`` is ``u^*: F(b′) → F(b)``; identities may be omitted.
    Arrows ``(b, x) → (b′, x′)`` are triples ``(u, φ: x → u^* x′, x′)``.
    """
    pull: Dict[Arrow, CatFunctor] = dict(reindex)
    for b in base.objects:
        pull.setdefault(base.identity(b), identity_functor(fibers[b]))
    for u in base.arrows:
        src, tgt = base.ends(u)
        functor = pull.get(u)
        if functor is None or functor.source != fibers[tgt] or functor.target != fibers[src]:
            raise InputError(f"reindexing along {label(u)} is missing or has the wrong boundary", law="reindexing")
    for u in base.arrows:
        for v in base._after(u):
            composite = compose_functors(pull[u], pull[v])
            if composite.key() != pull[base.compose(v, u)].key():
                raise InputError(f"reindexing is not strictly functorial at {label(v)} ∘ {label(u)}", law="functoriality")
    objects = [(b, x) for b in base.objects for x in fibers[b].objects]
    arrows: Dict[Arrow, Tuple[Obj, Obj]] = {}
    for u in base.arrows:
        b, b2 = base.ends(u)
        for x2 in fibers[b2].objects:
            target = pull[u](x2)
            for x in fibers[b].objects:
                for phi in fibers[b].hom(x, target):
                    arrows[(u, phi, x2)] = ((b, x), (b2, x2))
    identities = {(b, x): (base.identity(b), fibers[b].identity(x), x) for b, x in objects}

    def compose(s: Tuple, t: Tuple) -> Tuple:
        v, psi, x3 = s
        u, phi, _ = t
        b = base.src(u)
        return (base.compose(v, u), fibers[b].compose(pull[u].arrow(psi), phi), x3)

    total = FiniteCategory(objects, arrows, identities, compose, name=name or f"∫{base.label()}")
    projection = CatFunctor(total, base, {x: x[0] for x in objects}, {a: a[0] for a in arrows}, name="p")
    return total, projection
