"""Modules between finite categories: profunctor tables, two-sided spans and the conversions between them."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Dict, Hashable, List, Mapping, Sequence, Tuple

from cosmos.cat.category import Arrow, CatFunctor, FiniteCategory, Obj, compose_functors, identity_functor, label
from cosmos.cat.constructions import pair_functors, product_category, pullback_category
from cosmos.cat.fibrations import (
    is_cartesian_fibration,
    is_cocartesian_fibration,
    non_invertible_vertical_arrow,
    sliced,
)
from cosmos.comma.equivalence import Span, fibered_equivalence_search
from cosmos.comma.objects import CommaObject
from cosmos.core.errors import CharacterizationDisagreement, InputError
from cosmos.core.models import Certificate, Verdict
from cosmos.runtime import get_cat_cosmos

logger = logging.getLogger(__name__)

Element = Tuple[Obj, Obj, Hashable]


class Profunctor:
    """A module ``H: A ↛ B``: sets ``H(a, b)`` covariant in ``a`` and contravariant in ``b``.

    Elements are triples ``(a, b, token)``; ``left(u, x)`` acts by ``u: a → a′`` and
    ``right(x, v)`` by ``v: b′ → b``.
    """

    def __init__(
        self,
        source: FiniteCategory,
        target: FiniteCategory,
        table: Mapping[Tuple[Obj, Obj], Sequence[Hashable]],
        left: Callable[[Arrow, Element], Element],
        right: Callable[[Element, Arrow], Element],
        name: str = "",
    ) -> None:
        self.source = source
        self.target = target
        self.name = name
        self._table: Dict[Tuple[Obj, Obj], Tuple[Element, ...]] = {
            (a, b): tuple((a, b, t) for t in table.get((a, b), ()))
            for a in source.objects
            for b in target.objects
        }
        self._left_rule = left
        self._right_rule = right
        self._left: Dict[Tuple[Arrow, Element], Element] = {}
        self._right: Dict[Tuple[Element, Arrow], Element] = {}

    def __call__(self, a: Obj, b: Obj) -> Tuple[Element, ...]:
        return self._table[(a, b)]

    def elements(self) -> List[Element]:
        return [x for xs in self._table.values() for x in xs]

    def left(self, u: Arrow, x: Element) -> Element:
        if self.source.is_identity(u):
            return x
        key = (u, x)
        if key not in self._left:
            self._left[key] = self._left_rule(u, x)
        return self._left[key]

    def right(self, x: Element, v: Arrow) -> Element:
        if self.target.is_identity(v):
            return x
        key = (x, v)
        if key not in self._right:
            self._right[key] = self._right_rule(x, v)
        return self._right[key]

    def sizes(self) -> Dict[Tuple[Obj, Obj], int]:
        return {key: len(xs) for key, xs in self._table.items()}

    def label(self) -> str:
        return self.name or f"{self.source.label()} ↛ {self.target.label()}"

    def __repr__(self) -> str:
        return f"Profunctor({self.label()})"

    def describe(self) -> Dict[str, Any]:
        A, B = self.source, self.target
        return {
            "source": A.label(),
            "target": B.label(),
            "sizes": [[len(self(a, b)) for b in B.objects] for a in A.objects],
            "left": [
                [label(u), label(x), label(self.left(u, x))]
                for u in A.arrows
                if not A.is_identity(u)
                for x in self.elements()
                if x[0] == A.src(u)
            ],
            "right": [
                [label(x), label(v), label(self.right(x, v))]
                for v in B.arrows
                if not B.is_identity(v)
                for x in self.elements()
                if x[1] == B.tgt(v)
            ],
        }

    def validate(self) -> Profunctor:
        """Check boundaries, associativity and the commuting of the two actions."""
        A, B = self.source, self.target
        for x in self.elements():
            a, b, _ = x
            for u in A.arrows:
                if A.src(u) != a:
                    continue
                y = self.left(u, x)
                if y not in self(A.tgt(u), b):
                    raise InputError(f"{label(u)}·{label(x)} lands outside H({label(A.tgt(u))}, {label(b)})", law="module action boundary")
                for u2 in A._after(u):
                    if self.left(u2, y) != self.left(A.compose(u2, u), x):
                        raise InputError(f"left action not associative at {label(x)}", law="module associativity")
            for v in B.arrows:
                if B.tgt(v) != b:
                    continue
                y = self.right(x, v)
                if y not in self(a, B.src(v)):
                    raise InputError(f"{label(x)}·{label(v)} lands outside H({label(a)}, {label(B.src(v))})", law="module action boundary")
                for v0 in B.arrows:
                    if B.tgt(v0) == B.src(v) and self.right(y, v0) != self.right(x, B.compose(v, v0)):
                        raise InputError(f"right action not associative at {label(x)}", law="module associativity")
                for u in A.arrows:
                    if A.src(u) == a and self.left(u, y) != self.right(self.left(u, x), v):
                        raise InputError(f"actions do not commute at {label(x)}", law="module bimodule")
        return self


# -- standard modules ------------------------------------------------------------------------


@lru_cache
def unit_module(category: FiniteCategory) -> Profunctor:
    """The arrow module ``A^𝟚: A ↛ A`` with ``H(a, b) = hom(b, a)``."""
    A = category
    table = {(a, b): A.hom(b, a) for a in A.objects for b in A.objects}
    return Profunctor(
        A,
        A,
        table,
        lambda u, x: (A.tgt(u), x[1], A.compose(u, x[2])),
        lambda x, v: (x[0], A.src(v), A.compose(x[2], v)),
        name=f"{A.label()}^𝟚",
    )


@lru_cache
def comma_module(f: CatFunctor, g: CatFunctor) -> Profunctor:
    """``f↓g: C ↛ B`` with ``H(c, b) = hom(f b, g c)``."""
    A, B, C = f.target, f.source, g.source
    table = {(c, b): A.hom(f(b), g(c)) for c in C.objects for b in B.objects}
    return Profunctor(
        C,
        B,
        table,
        lambda u, x: (C.tgt(u), x[1], A.compose(g.arrow(u), x[2])),
        lambda x, v: (x[0], B.src(v), A.compose(x[2], f.arrow(v))),
        name=f"{f.label()}↓{g.label()}",
    )


def companion(f: CatFunctor) -> Profunctor:
    """``B↓f: A ↛ B`` with ``H(a, b) = hom(b, f a)``."""
    return comma_module(identity_functor(f.target), f)


def conjoint(f: CatFunctor) -> Profunctor:
    """``f↓B: B ↛ A`` with ``H(b, a) = hom(f a, b)``."""
    return comma_module(f, identity_functor(f.target))


def restrict_profunctor(H: Profunctor, a: CatFunctor, b: CatFunctor) -> Profunctor:
    """``H(a-, b-)``; elements wrap those of ``H``."""
    if a.target != H.source or b.target != H.target:
        raise InputError("restriction functors do not land in the module's categories")
    table = {(x, y): H(a(x), b(y)) for x in a.source.objects for y in b.source.objects}
    return Profunctor(
        a.source,
        b.source,
        table,
        lambda u, e: (a.source.tgt(u), e[1], H.left(a.arrow(u), e[2])),
        lambda e, v: (e[0], b.source.src(v), H.right(e[2], b.arrow(v))),
        name=f"{H.label()}({a.label()}, {b.label()})",
    )


# -- spans -------------------------------------------------------------------------------------


@dataclass(frozen=True)
class ModuleSpan:
    """A span ``(q, p): E → A × B`` presenting a module from A to B."""

    apex: FiniteCategory
    q: CatFunctor
    p: CatFunctor

    @property
    def source(self) -> FiniteCategory:
        return self.q.target

    @property
    def target(self) -> FiniteCategory:
        return self.p.target

    @classmethod
    def of_comma(cls, comma_object: CommaObject) -> ModuleSpan:
        return cls(comma_object.apex, comma_object.p1, comma_object.p0)

    def as_span(self) -> Span:
        return Span(get_cat_cosmos(), self.apex, self.q, self.p)

    def legs(self) -> CatFunctor:
        product, _ = product_category(self.source, self.target)
        return pair_functors(product, [self.q, self.p])

    def describe(self) -> Dict[str, Any]:
        return {"apex": self.apex.label(), "source": self.source.label(), "target": self.target.label()}


def _vertical_isomorphic(span: ModuleSpan, e: Obj, e2: Obj) -> bool:
    E, A, B = span.apex, span.source, span.target
    return any(
        E.is_iso(chi) and A.is_identity(span.q.arrow(chi)) and B.is_identity(span.p.arrow(chi))
        for chi in E.hom(e, e2)
    )


def from_span(span: ModuleSpan) -> Profunctor:
    """``H(a, b)``: isomorphism classes of the fiber over ``(a, b)``, acted on by lifts."""
    E, A, B, q, p = span.apex, span.source, span.target, span.q, span.p
    representative: Dict[Obj, Obj] = {}
    table: Dict[Tuple[Obj, Obj], List[Obj]] = {}
    for e in E.objects:
        bucket = table.setdefault((q(e), p(e)), [])
        rep = next((r for r in bucket if _vertical_isomorphic(span, e, r)), None)
        if rep is None:
            bucket.append(e)
            rep = e
        representative[e] = rep

    def left(u: Arrow, x: Element) -> Element:
        a, b, e = x
        for chi in E.arrows:
            if E.src(chi) == e and q.arrow(chi) == u and B.is_identity(p.arrow(chi)):
                return (A.tgt(u), b, representative[E.tgt(chi)])
        raise InputError(f"{label(u)} has no lift from {label(e)} over an identity of {B.label()}", law="cocartesian lift")

    def right(x: Element, v: Arrow) -> Element:
        a, b, e = x
        for chi in E.arrows:
            if E.tgt(chi) == e and A.is_identity(q.arrow(chi)) and p.arrow(chi) == v:
                return (a, B.src(v), representative[E.src(chi)])
        raise InputError(f"{label(v)} has no lift into {label(e)} over an identity of {A.label()}", law="cartesian lift")

    return Profunctor(A, B, table, left, right, name=f"H({E.label()})")


def to_span(H: Profunctor) -> ModuleSpan:
    """The two-sided category of elements of ``H``."""
    A, B = H.source, H.target
    objects = H.elements()
    arrows: Dict[Arrow, Tuple[Obj, Obj]] = {}
    for x in objects:
        for x2 in objects:
            for u in A.hom(x[0], x2[0]):
                for v in B.hom(x[1], x2[1]):
                    if H.left(u, x) == H.right(x2, v):
                        arrows[(u, v, x, x2)] = (x, x2)
    identities = {x: (A.identity(x[0]), B.identity(x[1]), x, x) for x in objects}
    E = FiniteCategory(
        objects,
        arrows,
        identities,
        lambda s, t: (A.compose(s[0], t[0]), B.compose(s[1], t[1]), t[2], s[3]),
        name=f"el({H.label()})",
    )
    q = CatFunctor(E, A, {x: x[0] for x in objects}, {a: a[0] for a in arrows}, name="q")
    p = CatFunctor(E, B, {x: x[1] for x in objects}, {a: a[1] for a in arrows}, name="p")
    return ModuleSpan(E, q, p)


# -- recognition and restriction --------------------------------------------------------------


def _sliced_route(span: ModuleSpan) -> Verdict:
    product, (to_a, to_b) = product_category(span.source, span.target)
    r = pair_functors(product, [span.q, span.p])
    certificate = Certificate(exact=True)
    over_a = is_cartesian_fibration(sliced(r, span.q, to_a))
    if over_a.is_no:
        return Verdict.no(f"{span.target.label()} does not act on the right: {over_a.reason}", {"clause": "cartesian over A", **_plain(over_a.witness)}, certificate)
    over_b = is_cocartesian_fibration(sliced(r, span.p, to_b))
    if over_b.is_no:
        return Verdict.no(f"{span.source.label()} does not act on the left: {over_b.reason}", {"clause": "cocartesian over B", **_plain(over_b.witness)}, certificate)
    isofibration = get_cat_cosmos().is_isofibration(r)
    if isofibration.is_no:
        return Verdict.no(f"legs are not an isofibration: {isofibration.reason}", {"clause": "groupoidal", **_plain(isofibration.witness)}, certificate)
    bad = non_invertible_vertical_arrow(r)
    if bad is not None:
        return Verdict.no("not groupoidal over A × B", {"clause": "groupoidal", "cell": label(bad)}, certificate)
    return Verdict.yes("cartesian over A, cocartesian over B and groupoidal over A × B", None, certificate)


def _plain(witness: Any) -> Dict[str, Any]:
    return dict(witness) if isinstance(witness, dict) else {}


def _classical_route(span: ModuleSpan) -> Verdict:
    certificate = Certificate(exact=True)
    try:
        H = from_span(span).validate()
    except InputError as exc:
        return Verdict.no(f"not a two-sided discrete fibration: {exc}", {"law": exc.law}, certificate)
    verdict = fibered_equivalence_search(span.as_span(), to_span(H).as_span())
    if verdict.is_yes:
        return Verdict.yes("equivalent over A × B to the elements of a profunctor", H, certificate)
    return Verdict.no(f"not equivalent to the elements of its profunctor: {verdict.reason}", verdict.witness, certificate)


def is_module(span: ModuleSpan) -> Verdict:
    """The three module clauses through sliced fibration checks, cross-checked against profunctors."""
    by_clauses = _sliced_route(span)
    by_profunctor = _classical_route(span)
    if by_clauses.status is not by_profunctor.status:
        raise CharacterizationDisagreement(
            f"module clauses {by_clauses.status.name} ({by_clauses.reason}) against "
            f"profunctor criterion {by_profunctor.status.name} ({by_profunctor.reason})"
        )
    certificate = Certificate(exact=True, notes=("routes: sliced fibrations, two-sided discrete fibration",))
    if by_clauses.is_no:
        return Verdict.no(by_clauses.reason, by_clauses.witness, certificate)
    logger.info("module %s: %s ↛ %s", span.apex.label(), span.source.label(), span.target.label())
    return Verdict.yes(by_clauses.reason, by_profunctor.witness, certificate)


def restrict_module(span: ModuleSpan, a: CatFunctor, b: CatFunctor) -> ModuleSpan:
    """The pullback of ``E → A × B`` along ``a × b``, checked against ``H(a-, b-)``."""
    if a.target != span.source or b.target != span.target:
        raise InputError("restriction functors do not land in the module's categories")
    K = get_cat_cosmos()
    legs = span.legs()
    along = K.product_map(a, b)
    apex, (_, to_base) = pullback_category(legs, along)
    _, (to_a, to_b) = product_category(a.source, b.source)
    restricted = ModuleSpan(apex, compose_functors(to_a, to_base), compose_functors(to_b, to_base))
    expected = restrict_profunctor(from_span(span), a, b).sizes()
    if from_span(restricted).sizes() != expected:
        raise CharacterizationDisagreement(f"restriction of {span.apex.label()} differs from H(a-, b-)")
    return restricted

