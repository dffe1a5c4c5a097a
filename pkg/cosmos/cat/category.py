"""Finite categories, functors and natural transformations with exact composition."""
from __future__ import annotations

import itertools
from typing import Any, Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from cosmos.core.errors import BoundaryMismatch, InputError

Obj = Hashable
Arrow = Hashable
Composition = Union[Mapping[Tuple[Arrow, Arrow], Arrow], Callable[[Arrow, Arrow], Arrow]]


def label(value: Any) -> str:
    """Readable name for objects and arrows, including generated tuple data."""
    if hasattr(value, "label"):
        return value.label()
    if isinstance(value, tuple):
        return "(" + ", ".join(label(v) for v in value) + ")"
    return str(value)


class FiniteCategory:
    """A category with finitely many objects and arrows.

    ``arrows`` maps every arrow (identities included) to its (source, target).
    ``composition`` is either a table keyed by ``(g, f)`` meaning ``g ∘ f`` or a
    callable; composites with an identity are filled in automatically.
    """

    def __init__(
        self,
        objects: Iterable[Obj],
        arrows: Mapping[Arrow, Tuple[Obj, Obj]],
        identities: Mapping[Obj, Arrow],
        composition: Composition,
        name: str = "",
    ) -> None:
        self.objects: Tuple[Obj, ...] = tuple(objects)
        self.arrows: Tuple[Arrow, ...] = tuple(arrows)
        self._ends: Dict[Arrow, Tuple[Obj, Obj]] = dict(arrows)
        self._ids: Dict[Obj, Arrow] = dict(identities)
        self._identity_set = set(self._ids.values())
        self._rule: Optional[Callable[[Arrow, Arrow], Arrow]] = composition if callable(composition) else None
        self._table: Dict[Tuple[Arrow, Arrow], Arrow] = {} if callable(composition) else dict(composition)
        self.name = name
        self._objects = set(self.objects)
        self._order = {a: i for i, a in enumerate(self.arrows)}
        self._homs: Dict[Tuple[Obj, Obj], Tuple[Arrow, ...]] = {}
        self._outgoing: Dict[Obj, List[Arrow]] = {}
        for a in self.arrows:
            self._homs.setdefault(self._ends[a], ())
            self._homs[self._ends[a]] += (a,)
            self._outgoing.setdefault(self._ends[a][0], []).append(a)
        self._inverse: Dict[Arrow, Optional[Arrow]] = {}
        self._hash: Optional[int] = None
        self._structure_key: Optional[Tuple[Any, ...]] = None
        self._composites: Optional[Tuple[Arrow, ...]] = None

    # -- structure ------------------------------------------------------------------

    def src(self, a: Arrow) -> Obj:
        return self._ends[a][0]

    def tgt(self, a: Arrow) -> Obj:
        return self._ends[a][1]

    def ends(self, a: Arrow) -> Tuple[Obj, Obj]:
        return self._ends[a]

    def identity(self, x: Obj) -> Arrow:
        return self._ids[x]

    def is_identity(self, a: Arrow) -> bool:
        return a in self._identity_set

    def has_object(self, x: object) -> bool:
        return x in self._objects

    def has_arrow(self, a: object) -> bool:
        return a in self._ends

    def arrow_index(self, a: Arrow) -> int:
        return self._order[a]

    def hom(self, x: Obj, y: Obj) -> Tuple[Arrow, ...]:
        return self._homs.get((x, y), ())

    def compose(self, g: Arrow, f: Arrow) -> Arrow:
        """``g ∘ f``; raises :class:`BoundaryMismatch` when not composable."""
        if self.tgt(f) != self.src(g):
            raise BoundaryMismatch(f"cannot compose {label(g)} after {label(f)} in {self.label()}")
        if f in self._identity_set:
            return g
        if g in self._identity_set:
            return f
        key = (g, f)
        result = self._table.get(key)
        if result is None:
            if self._rule is None:
                raise InputError(f"composite {label(g)} ∘ {label(f)} missing", law="total composition")
            result = self._rule(g, f)
            self._table[key] = result
        return result

    def compose_path(self, arrows: Sequence[Arrow]) -> Arrow:
        """Composite of a path written in diagrammatic order f1, f2, ..."""
        result = arrows[0]
        for a in arrows[1:]:
            result = self.compose(a, result)
        return result

    def inverse(self, a: Arrow) -> Optional[Arrow]:
        if a not in self._inverse:
            x, y = self._ends[a]
            self._inverse[a] = next(
                (
                    b
                    for b in self.hom(y, x)
                    if self.compose(b, a) == self._ids[x] and self.compose(a, b) == self._ids[y]
                ),
                None,
            )
        return self._inverse[a]

    def is_iso(self, a: Arrow) -> bool:
        return self.inverse(a) is not None

    def is_groupoid(self) -> bool:
        return all(self.is_iso(a) for a in self.arrows)

    def isomorphic(self, x: Obj, y: Obj) -> bool:
        return any(self.is_iso(a) for a in self.hom(x, y))

    def label(self) -> str:
        return self.name or f"Cat[{len(self.objects)} objects, {len(self.arrows)} arrows]"

    def __repr__(self) -> str:
        return f"FiniteCategory({self.label()})"

    # -- validation -----------------------------------------------------------------

    def validate(self) -> FiniteCategory:
        """Check the category laws on the full table; raise :class:`InputError`."""
        for a, (x, y) in self._ends.items():
            if x not in self._objects or y not in self._objects:
                raise InputError(f"arrow {label(a)} has an unknown endpoint", law="arrow endpoints")
        for x in self.objects:
            i = self._ids.get(x)
            if i is None or self._ends.get(i) != (x, x):
                raise InputError(f"object {label(x)} has no identity", law="identities")
        for f in self.arrows:
            for g in self._after(f):
                gf = self.compose(g, f)
                if gf not in self._ends or self._ends[gf] != (self.src(f), self.tgt(g)):
                    raise InputError(f"{label(g)} ∘ {label(f)} has the wrong boundary", law="composite boundary")
        for f in self.arrows:
            for g in self._after(f):
                for h in self._after(g):
                    if self.compose(h, self.compose(g, f)) != self.compose(self.compose(h, g), f):
                        raise InputError(
                            f"({label(h)} ∘ {label(g)}) ∘ {label(f)} != {label(h)} ∘ ({label(g)} ∘ {label(f)})",
                            law="associativity",
                        )
        return self

    def _after(self, f: Arrow) -> List[Arrow]:
        return self._outgoing.get(self._ends[f][1], [])

    # -- derived categories ---------------------------------------------------------

    def opposite(self) -> FiniteCategory:
        return FiniteCategory(
            self.objects,
            {a: (y, x) for a, (x, y) in self._ends.items()},
            self._ids,
            lambda g, f: self.compose(f, g),
            name=f"{self.label()}^op",
        )

    def relabel(self, name: str) -> FiniteCategory:
        return FiniteCategory(self.objects, self._ends, self._ids, self.compose, name=name)

    def describe(self) -> Dict[str, Any]:
        comp = []
        for f in self.arrows:
            for g in self._after(f):
                if not self.is_identity(f) and not self.is_identity(g):
                    comp.append([label(g), label(f), label(self.compose(g, f))])
        return {
            "objects": [label(x) for x in self.objects],
            "arrows": [{"id": label(a), "src": label(x), "tgt": label(y)} for a, (x, y) in self._ends.items()],
            "comp": comp,
            "ids": {label(x): label(i) for x, i in self._ids.items()},
        }

    # -- identity ---------------------------------------------------------------------

    def _structure(self) -> Tuple[Any, ...]:
        if self._structure_key is None:
            ids = tuple(self._ids.get(x) for x in self.objects)
            self._structure_key = (self.objects, tuple(self._ends.items()), ids)
        return self._structure_key

    def _composition(self) -> Tuple[Arrow, ...]:
        """Composites of the non-identity composable pairs, in arrow order."""
        if self._composites is None:
            self._composites = tuple(
                self.compose(g, f)
                for f in self.arrows
                if f not in self._identity_set
                for g in self._after(f)
                if g not in self._identity_set
            )
        return self._composites

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteCategory):
            return NotImplemented
        if hash(self) != hash(other) or self._structure() != other._structure():
            return False
        return self._composition() == other._composition()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.objects, tuple(self._ends.items())))
        return self._hash


class CatFunctor:
    """A functor between finite categories; identities map to identities if omitted."""

    def __init__(
        self,
        source: FiniteCategory,
        target: FiniteCategory,
        on_objects: Mapping[Obj, Obj],
        on_arrows: Mapping[Arrow, Arrow],
        name: str = "",
    ) -> None:
        self.source = source
        self.target = target
        self.on_objects: Dict[Obj, Obj] = dict(on_objects)
        arrows = dict(on_arrows)
        for x in source.objects:
            if x in self.on_objects:
                arrows.setdefault(source.identity(x), target.identity(self.on_objects[x]))
        self.on_arrows: Dict[Arrow, Arrow] = arrows
        self.name = name
        self._key = (
            tuple(self.on_objects.get(x) for x in source.objects),
            tuple(self.on_arrows.get(a) for a in source.arrows),
        )

    def __call__(self, x: Obj) -> Obj:
        return self.on_objects[x]

    def arrow(self, a: Arrow) -> Arrow:
        return self.on_arrows[a]

    def key(self) -> Tuple[Any, ...]:
        return self._key

    def validate(self) -> CatFunctor:
        src, tgt = self.source, self.target
        for x in src.objects:
            if x not in self.on_objects or not tgt.has_object(self.on_objects[x]):
                raise InputError(f"functor {self.label()} undefined on object {label(x)}", law="totality")
        for a in src.arrows:
            b = self.on_arrows.get(a)
            if b is None or not tgt.has_arrow(b):
                raise InputError(f"functor {self.label()} undefined on arrow {label(a)}", law="totality")
            if tgt.ends(b) != (self(src.src(a)), self(src.tgt(a))):
                raise InputError(f"{label(a)} sent to {label(b)} with the wrong boundary", law="functor boundary")
        for x in src.objects:
            if self.on_arrows[src.identity(x)] != tgt.identity(self(x)):
                raise InputError(f"identity of {label(x)} not preserved", law="functor identities")
        for f in src.arrows:
            for g in src._after(f):
                if self.arrow(src.compose(g, f)) != tgt.compose(self.arrow(g), self.arrow(f)):
                    raise InputError(f"composite {label(g)} ∘ {label(f)} not preserved", law="functoriality")
        return self

    def is_identity(self) -> bool:
        return self.source == self.target and all(self(x) == x for x in self.source.objects) and all(
            self.arrow(a) == a for a in self.source.arrows
        )

    def label(self) -> str:
        if self.name:
            return self.name
        return "{" + ", ".join(f"{label(x)}↦{label(y)}" for x, y in self.on_objects.items()) + "}"

    def describe(self) -> Dict[str, Any]:
        return {
            "objects": {label(x): label(y) for x, y in self.on_objects.items()},
            "arrows": {label(a): label(b) for a, b in self.on_arrows.items() if not self.source.is_identity(a)},
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CatFunctor):
            return NotImplemented
        return self._key == other._key and self.source == other.source and self.target == other.target

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"CatFunctor({self.source.label()} → {self.target.label()}: {self.label()})"


def identity_functor(category: FiniteCategory) -> CatFunctor:
    return CatFunctor(
        category,
        category,
        {x: x for x in category.objects},
        {a: a for a in category.arrows},
        name=f"id_{category.label()}",
    )


def compose_functors(g: CatFunctor, f: CatFunctor) -> CatFunctor:
    """``g ∘ f``."""
    if f.target != g.source:
        raise BoundaryMismatch(f"cannot compose {g.label()} after {f.label()}")
    name = f"{g.name}.{f.name}" if g.name and f.name else ""
    return CatFunctor(
        f.source,
        g.target,
        {x: g(y) for x, y in f.on_objects.items()},
        {a: g.arrow(b) for a, b in f.on_arrows.items()},
        name=name,
    )


def constant_functor(source: FiniteCategory, target: FiniteCategory, obj: Obj) -> CatFunctor:
    ident = target.identity(obj)
    return CatFunctor(source, target, {x: obj for x in source.objects}, {a: ident for a in source.arrows})


class NatTransform:
    """A natural transformation ``source ⇒ target`` given by its components."""

    def __init__(self, source: CatFunctor, target: CatFunctor, components: Mapping[Obj, Arrow]) -> None:
        if source.source != target.source or source.target != target.target:
            raise BoundaryMismatch("natural transformation between functors with different boundaries")
        self.source = source
        self.target = target
        self.components: Dict[Obj, Arrow] = dict(components)
        self._key = tuple(self.components.get(x) for x in source.source.objects)

    @property
    def domain(self) -> FiniteCategory:
        return self.source.source

    @property
    def codomain(self) -> FiniteCategory:
        return self.source.target

    def __getitem__(self, x: Obj) -> Arrow:
        return self.components[x]

    def validate(self) -> NatTransform:
        A, B = self.domain, self.codomain
        for x in A.objects:
            c = self.components.get(x)
            if c is None or not B.has_arrow(c) or B.ends(c) != (self.source(x), self.target(x)):
                raise InputError(f"component at {label(x)} has the wrong boundary", law="component boundary")
        for a in A.arrows:
            x, y = A.ends(a)
            lhs = B.compose(self.components[y], self.source.arrow(a))
            rhs = B.compose(self.target.arrow(a), self.components[x])
            if lhs != rhs:
                raise InputError(f"naturality square at {label(a)} does not commute", law="naturality")
        return self

    def is_identity(self) -> bool:
        return self.source == self.target and all(self.codomain.is_identity(c) for c in self.components.values())

    def is_invertible(self) -> bool:
        return all(self.codomain.is_iso(c) for c in self.components.values())

    def inverse(self) -> NatTransform:
        B = self.codomain
        inverted = {x: B.inverse(c) for x, c in self.components.items()}
        missing = [x for x, c in inverted.items() if c is None]
        if missing:
            raise InputError(f"component at {label(missing[0])} is not invertible", law="invertibility")
        return NatTransform(self.target, self.source, inverted)

    def key(self) -> Tuple[Any, ...]:
        return self._key

    def label(self) -> str:
        return "⟨" + ", ".join(f"{label(x)}:{label(c)}" for x, c in self.components.items()) + "⟩"

    def describe(self) -> Dict[str, Any]:
        return {
            "source": self.source.describe(),
            "target": self.target.describe(),
            "components": {label(x): label(c) for x, c in self.components.items()},
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NatTransform):
            return NotImplemented
        return self._key == other._key and self.source == other.source and self.target == other.target

    def __hash__(self) -> int:
        return hash((self._key, self.source, self.target))

    def __repr__(self) -> str:
        return f"NatTransform({self.source.label()} ⇒ {self.target.label()}: {self.label()})"


def identity_transformation(functor: CatFunctor) -> NatTransform:
    B = functor.target
    return NatTransform(functor, functor, {x: B.identity(functor(x)) for x in functor.source.objects})


def vcompose(beta: NatTransform, alpha: NatTransform) -> NatTransform:
    """Vertical composite ``β · α``."""
    if alpha.target != beta.source:
        raise BoundaryMismatch("vertical composite of transformations with mismatched boundary")
    B = alpha.codomain
    return NatTransform(alpha.source, beta.target, {x: B.compose(beta[x], alpha[x]) for x in alpha.domain.objects})


def whisker_left(h: CatFunctor, alpha: NatTransform) -> NatTransform:
    """``h α`` for ``α: F ⇒ G: A → B`` and ``h: B → C``."""
    return NatTransform(
        compose_functors(h, alpha.source),
        compose_functors(h, alpha.target),
        {x: h.arrow(c) for x, c in alpha.components.items()},
    )


def whisker_right(alpha: NatTransform, k: CatFunctor) -> NatTransform:
    """``α k`` for ``k: X → A``."""
    return NatTransform(
        compose_functors(alpha.source, k),
        compose_functors(alpha.target, k),
        {y: alpha[k(y)] for y in k.source.objects},
    )


def hcompose(beta: NatTransform, alpha: NatTransform) -> NatTransform:
    """Horizontal composite ``β ∘ α = (β F′) · (G α)`` for ``α: F ⇒ F′``, ``β: G ⇒ G′``."""
    return vcompose(whisker_right(beta, alpha.target), whisker_left(beta.source, alpha))


# -- builders --------------------------------------------------------------------------


def poset(elements: Sequence[Obj], leq: Callable[[Obj, Obj], bool], name: str = "") -> FiniteCategory:
    """The category of a finite partial order, arrows named ``"x->y"`` and ``"id_x"``."""

    def arrow(x: Obj, y: Obj) -> str:
        return f"id_{label(x)}" if x == y else f"{label(x)}->{label(y)}"

    arrows: Dict[Arrow, Tuple[Obj, Obj]] = {}
    for x in elements:
        arrows[arrow(x, x)] = (x, x)
    for x, y in itertools.product(elements, repeat=2):
        if x != y and leq(x, y):
            arrows[arrow(x, y)] = (x, y)
    table = {}
    for f, (x, y) in arrows.items():
        for g, (y2, z) in arrows.items():
            if y == y2:
                table[(g, f)] = arrow(x, z)
    return FiniteCategory(elements, arrows, {x: arrow(x, x) for x in elements}, table, name=name)


def ordinal(n: int) -> FiniteCategory:
    """The ordinal [n] = {0 < 1 < ... < n}."""
    if n < 0:
        raise InputError(f"ordinal needs n >= 0, got {n}")
    return poset(list(range(n + 1)), lambda x, y: x <= y, name=f"[{n}]")


def discrete(objects: Sequence[Obj], name: str = "") -> FiniteCategory:
    return poset(list(objects), lambda x, y: x == y, name=name or f"Disc{len(objects)}")


def terminal_category() -> FiniteCategory:
    return poset(["*"], lambda x, y: True, name="1")


def empty_category() -> FiniteCategory:
    return FiniteCategory((), {}, {}, {}, name="∅")


def chaotic(objects: Sequence[Obj], name: str = "") -> FiniteCategory:
    """The indiscrete groupoid: exactly one arrow between any two objects."""
    return poset(list(objects), lambda x, y: True, name=name or f"Chaotic{len(objects)}")


def boolean_lattice(atoms: Sequence[str], name: str = "") -> FiniteCategory:
    """Subsets of ``atoms`` under inclusion, named like ``"{x,y}"`` and ``"∅"``."""
    subsets = [frozenset(c) for r in range(len(atoms) + 1) for c in itertools.combinations(atoms, r)]

    def show(s: frozenset) -> str:
        return "{" + ",".join(a for a in atoms if a in s) + "}" if s else "∅"

    names = {show(s): s for s in subsets}
    return poset(list(names), lambda x, y: names[x] <= names[y], name=name or f"P({','.join(atoms)})")


def free_isomorphism() -> FiniteCategory:
    """Two objects and a pair of mutually inverse arrows ``f: a → b``, ``g: b → a``."""
    arrows = {"id_a": ("a", "a"), "id_b": ("b", "b"), "f": ("a", "b"), "g": ("b", "a")}
    table = {("g", "f"): "id_a", ("f", "g"): "id_b"}
    return FiniteCategory(["a", "b"], arrows, {"a": "id_a", "b": "id_b"}, table, name="Iso")


def cyclic_group(n: int) -> FiniteCategory:
    """Z/n as a one-object groupoid; arrow ``"g^k"`` is the k-th power, ``"e"`` the unit."""

    def power(k: int) -> str:
        k %= n
        return "e" if k == 0 else ("g" if k == 1 else f"g^{k}")

    arrows = {power(k): ("*", "*") for k in range(n)}
    table = {(power(j), power(i)): power(i + j) for i in range(n) for j in range(n)}
    return FiniteCategory(["*"], arrows, {"*": "e"}, table, name=f"Z/{n}")


def from_table(
    objects: Sequence[Obj],
    arrows: Sequence[Tuple[Arrow, Obj, Obj]],
    composites: Iterable[Tuple[Arrow, Arrow, Arrow]],
    identities: Mapping[Obj, Arrow],
    name: str = "",
) -> FiniteCategory:
    """Build a category from listed arrows and nonidentity composites ``(g, f, g∘f)``."""
    ends: Dict[Arrow, Tuple[Obj, Obj]] = {}
    for a, x, y in arrows:
        if a in ends:
            raise InputError(f"duplicate arrow {label(a)}", law="unique identifiers")
        ends[a] = (x, y)
    for x, i in identities.items():
        ends.setdefault(i, (x, x))
    table = {(g, f): gf for g, f, gf in composites}
    return FiniteCategory(objects, ends, identities, table, name=name)
