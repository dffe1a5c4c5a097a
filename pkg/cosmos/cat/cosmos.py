"""The exact instance: finite categories, functors and natural transformations."""
from __future__ import annotations

from typing import Dict, Iterator, List, Tuple

from cosmos.cat.category import (
    CatFunctor,
    FiniteCategory,
    NatTransform,
    compose_functors,
    constant_functor,
    identity_functor,
    identity_transformation,
    label,
    terminal_category,
    vcompose,
    whisker_left,
    whisker_right,
)
from cosmos.cat.constructions import arrow_category, pair_functors, product_category, pullback_category
from cosmos.cat.functors import functor_category, iter_functors, iter_transformations
from cosmos.core.base import ArrowObject, Cosmos, LimitCone, TwoCell
from cosmos.core.errors import BoundaryMismatch, InputError
from cosmos.core.models import Certificate, Verdict


class CatCosmos(Cosmos):
    """Cat with its strict 2-category of functors and natural transformations.

    Every decision here enumerates finite data, so verdicts are never UNKNOWN.
    """

    kind = "Cat"
    exact = True
    one_cell_type = CatFunctor

    def __init__(self) -> None:
        self._arrows: Dict[FiniteCategory, ArrowObject] = {}
        self._bases: Dict[FiniteCategory, FiniteCategory] = {}

    # -- 2-category -----------------------------------------------------------------------

    def hom(self, source: FiniteCategory, target: FiniteCategory) -> FiniteCategory:
        return functor_category(source, target)

    def identity(self, obj: FiniteCategory) -> CatFunctor:
        return identity_functor(obj)

    def compose(self, g: CatFunctor, f: CatFunctor) -> CatFunctor:
        return compose_functors(g, f)

    def nat_cell(self, alpha: NatTransform) -> TwoCell:
        """The 2-cell named by a natural transformation."""
        return TwoCell(self, alpha.source, alpha.target, alpha)

    # 2-cell algebra directly on transformations, without building functor categories

    def identity_cell(self, f: CatFunctor) -> TwoCell:
        return self.nat_cell(identity_transformation(f))

    def cell(self, source: CatFunctor, target: CatFunctor, arrow: NatTransform) -> TwoCell:
        if arrow.source != source or arrow.target != target:
            raise BoundaryMismatch(f"{arrow.label()} is not a 2-cell {source.label()} ⇒ {target.label()}")
        return self.nat_cell(arrow.validate())

    def cells(self, source: CatFunctor, target: CatFunctor) -> Iterator[TwoCell]:
        for alpha in iter_transformations(source, target):
            yield self.nat_cell(alpha)

    def one_cells(self, source: FiniteCategory, target: FiniteCategory) -> Tuple[CatFunctor, ...]:
        return tuple(iter_functors(source, target))

    def is_invertible(self, alpha: TwoCell) -> bool:
        return alpha.arrow.is_invertible()

    def inverse(self, alpha: TwoCell) -> TwoCell:
        return self.nat_cell(alpha.arrow.inverse())

    def vertical(self, beta: TwoCell, alpha: TwoCell) -> TwoCell:
        return self.nat_cell(vcompose(beta.arrow, alpha.arrow))

    def whisker_left(self, h: CatFunctor, alpha: TwoCell) -> TwoCell:
        return self.nat_cell(whisker_left(h, alpha.arrow))

    def whisker_right(self, alpha: TwoCell, k: CatFunctor) -> TwoCell:
        return self.nat_cell(whisker_right(alpha.arrow, k))

    def postcompose(self, h: CatFunctor, obj: FiniteCategory) -> CatFunctor:
        source = functor_category(obj, h.source)
        target = functor_category(obj, h.target)
        return CatFunctor(
            source,
            target,
            {F: compose_functors(h, F) for F in source.objects},
            {alpha: whisker_left(h, alpha) for alpha in source.arrows},
        )

    def precompose(self, k: CatFunctor, obj: FiniteCategory) -> CatFunctor:
        source = functor_category(k.target, obj)
        target = functor_category(k.source, obj)
        return CatFunctor(
            source,
            target,
            {F: compose_functors(F, k) for F in source.objects},
            {alpha: whisker_right(alpha, k) for alpha in source.arrows},
        )

    # -- limits ---------------------------------------------------------------------------

    def terminal(self) -> FiniteCategory:
        return terminal_category()

    def to_terminal(self, obj: FiniteCategory) -> CatFunctor:
        one = terminal_category()
        functor = constant_functor(obj, one, "*")
        functor.name = "!"
        return functor

    def elements(self, obj: FiniteCategory) -> List[CatFunctor]:
        one = terminal_category()
        result = []
        for x in obj.objects:
            element = constant_functor(one, obj, x)
            element.name = label(x)
            result.append(element)
        return result

    def element(self, obj: FiniteCategory, x: object) -> CatFunctor:
        """The element ``1 → obj`` at an object."""
        if not obj.has_object(x):
            raise InputError(f"{label(x)} is not an object of {obj.label()}")
        element = constant_functor(terminal_category(), obj, x)
        element.name = label(x)
        return element

    def product(self, left: FiniteCategory, right: FiniteCategory) -> LimitCone:
        apex, legs = product_category(left, right)
        return LimitCone(apex, legs, lambda *maps: pair_functors(apex, maps))

    def pullback(self, f: CatFunctor, g: CatFunctor) -> LimitCone:
        apex, legs = pullback_category(f, g)
        return LimitCone(apex, legs, lambda *maps: pair_functors(apex, maps))

    def arrow_object(self, obj: FiniteCategory) -> ArrowObject:
        cached = self._arrows.get(obj)
        if cached is None:
            apex, ev0, ev1 = arrow_category(obj)
            cached = ArrowObject(apex, ev0, ev1)
            self._arrows[obj] = cached
            self._bases[apex] = obj
        return cached

    def shape(self, category: FiniteCategory) -> FiniteCategory:
        return category

    def cotensor(self, shape: FiniteCategory, obj: FiniteCategory) -> FiniteCategory:
        return functor_category(shape, obj)

    def cotensor_map(self, shape: FiniteCategory, h: CatFunctor) -> CatFunctor:
        return self.postcompose(h, shape)

    def diagonal(self, shape: FiniteCategory, obj: FiniteCategory) -> CatFunctor:
        target = functor_category(shape, obj)
        on_arrows = {}
        for h in obj.arrows:
            x, y = obj.ends(h)
            on_arrows[h] = NatTransform(
                constant_functor(shape, obj, x), constant_functor(shape, obj, y), {j: h for j in shape.objects}
            )
        return CatFunctor(obj, target, {x: constant_functor(shape, obj, x) for x in obj.objects}, on_arrows, name="Δ")

    def cotensor_cell(self, k: CatFunctor) -> TwoCell:
        base = self._bases.get(k.target)
        if base is None:
            raise InputError("cotensor_cell needs a functor into an arrow category built by arrow_object")
        arrows = self.arrow_object(base)
        source = compose_functors(arrows.ev0, k)
        target = compose_functors(arrows.ev1, k)
        return self.nat_cell(NatTransform(source, target, {x: k(x) for x in k.source.objects}))

    def cell_as_cotensor(self, alpha: TwoCell) -> CatFunctor:
        arrows = self.arrow_object(alpha.codomain)
        nat: NatTransform = alpha.arrow
        F, G = alpha.source, alpha.target
        X = alpha.domain
        on_arrows = {a: (F.arrow(a), G.arrow(a), nat[X.src(a)], nat[X.tgt(a)]) for a in X.arrows}
        return CatFunctor(X, arrows.apex, {x: nat[x] for x in X.objects}, on_arrows)

    def is_isofibration(self, p: CatFunctor) -> Verdict:
        """Isomorphisms in the base lift along p from either endpoint."""
        E, B = p.source, p.target
        certificate = Certificate(exact=True)
        for e in E.objects:
            for beta in B.arrows:
                if not B.is_iso(beta):
                    continue
                if B.src(beta) == p(e) and not any(
                    E.is_iso(chi) and p.arrow(chi) == beta for chi in E.arrows if E.src(chi) == e
                ):
                    return Verdict.no(
                        f"isomorphism {label(beta)} has no lift from {label(e)}",
                        {"object": label(e), "arrow": label(beta)},
                        certificate,
                    )
                if B.tgt(beta) == p(e) and not any(
                    E.is_iso(chi) and p.arrow(chi) == beta for chi in E.arrows if E.tgt(chi) == e
                ):
                    return Verdict.no(
                        f"isomorphism {label(beta)} has no lift into {label(e)}",
                        {"object": label(e), "arrow": label(beta)},
                        certificate,
                    )
        return Verdict.yes("isomorphisms lift from both endpoints", None, certificate)


__all__ = ["CatCosmos"]
