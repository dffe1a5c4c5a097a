"""Cells between sequences of modules, their composition, and the cartesian and unit checks."""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from cosmos.cat.category import (
    CatFunctor,
    FiniteCategory,
    NatTransform,
    Obj,
    compose_functors,
    identity_functor,
    identity_transformation,
    label,
)
from cosmos.cat.functors import iter_functors, iter_transformations
from cosmos.core.errors import BoundaryMismatch, InputError
from cosmos.core.models import Certificate, Verdict
from cosmos.equipment.modules import (
    Element,
    Profunctor,
    companion,
    conjoint,
    restrict_profunctor,
    unit_module,
)

logger = logging.getLogger(__name__)

# (a0, ..., an) with the composable elements (x1, ..., xn)
Key = Tuple[Tuple[Obj, ...], Tuple[Element, ...]]
Constraint = Tuple[Key, Callable[[Element], Element], Key, Callable[[Element], Element]]


def _same(x: Element) -> Element:
    return x


@dataclass(frozen=True)
class Frame:
    """Boundary of a cell ``(E1, ..., En) ⇒ F`` with vertical functors ``left: A0 → B0`` and ``right: An → B1``.

    ``base`` names the category ``A0 = An`` of a nullary frame.
    """

    sources: Tuple[Profunctor, ...]
    target: Profunctor
    left: CatFunctor
    right: CatFunctor
    base: Optional[FiniteCategory] = None

    def __post_init__(self) -> None:
        if not self.sources and self.base is None:
            raise InputError("a nullary frame needs a base category")
        for first, second in zip(self.sources, self.sources[1:]):
            if first.target != second.source:
                raise BoundaryMismatch(f"{first.label()} and {second.label()} are not composable")
        if self.left.source != self.start or self.right.source != self.end:
            raise BoundaryMismatch("vertical functors do not start at the ends of the source sequence")
        if self.left.target != self.target.source or self.right.target != self.target.target:
            raise BoundaryMismatch(f"vertical functors do not land at the ends of {self.target.label()}")

    @property
    def start(self) -> FiniteCategory:
        return self.sources[0].source if self.sources else self.base

    @property
    def end(self) -> FiniteCategory:
        return self.sources[-1].target if self.sources else self.base

    @property
    def arity(self) -> int:
        return len(self.sources)

    def tuples(self) -> List[Key]:
        """Objects of the span composite of the sources, one per composable tuple of elements."""
        if not self.sources:
            return [((a,), ()) for a in self.base.objects]
        keys: List[Key] = [((x[0], x[1]), (x,)) for x in self.sources[0].elements()]
        for module in self.sources[1:]:
            keys = [
                (objs + (x[1],), xs + (x,))
                for objs, xs in keys
                for x in module.elements()
                if x[0] == objs[-1]
            ]
        return keys

    def values(self, key: Key) -> Tuple[Element, ...]:
        objs = key[0]
        return self.target(self.left(objs[0]), self.right(objs[-1]))

    def constraints(self) -> List[Constraint]:
        """Naturality at both ends and balance at every interior object."""
        F, f, g = self.target, self.left, self.right
        keys = self.tuples()
        found: List[Constraint] = []
        if not self.sources:
            A = self.base
            for u in A.arrows:
                if A.is_identity(u):
                    continue
                a, a2 = A.ends(u)
                found.append(
                    (
                        ((a,), ()),
                        lambda y, u=u: F.left(f.arrow(u), y),
                        ((a2,), ()),
                        lambda y, u=u: F.right(y, g.arrow(u)),
                    )
                )
            return found
        first, last = self.sources[0], self.sources[-1]
        for key in keys:
            objs, xs = key
            for u in self.start.arrows:
                if self.start.src(u) == objs[0] and not self.start.is_identity(u):
                    moved = ((self.start.tgt(u),) + objs[1:], (first.left(u, xs[0]),) + xs[1:])
                    found.append((key, lambda y, u=u: F.left(f.arrow(u), y), moved, _same))
            for v in self.end.arrows:
                if self.end.tgt(v) == objs[-1] and not self.end.is_identity(v):
                    moved = (objs[:-1] + (self.end.src(v),), xs[:-1] + (last.right(xs[-1], v),))
                    found.append((key, lambda y, v=v: F.right(y, g.arrow(v)), moved, _same))
        for i in range(1, self.arity):
            middle = self.sources[i - 1].target
            lefts = {(objs[: i + 1], xs[:i]) for objs, xs in keys}
            rights = {(objs[i:], xs[i:]) for objs, xs in keys}
            for u in middle.arrows:
                if middle.is_identity(u):
                    continue
                a, a2 = middle.ends(u)
                for l_objs, l_xs in lefts:
                    if l_objs[-1] != a2:
                        continue
                    for r_objs, r_xs in rights:
                        if r_objs[0] != a:
                            continue
                        pulled = (l_objs[:-1] + r_objs, l_xs[:-1] + (self.sources[i - 1].right(l_xs[-1], u),) + r_xs)
                        pushed = (l_objs + r_objs[1:], l_xs + (self.sources[i].left(u, r_xs[0]),) + r_xs[1:])
                        found.append((pulled, _same, pushed, _same))
        return found

    def describe(self) -> Dict[str, Any]:
        return {
            "sources": [m.label() for m in self.sources],
            "target": self.target.label(),
            "left": self.left.label(),
            "right": self.right.label(),
            "base": self.base.label() if self.base is not None else None,
        }


@dataclass(frozen=True)
class Cell:
    """A cell in a frame, given by its value on every composable tuple."""

    frame: Frame
    assignment: Tuple[Tuple[Key, Element], ...] = field(repr=False)

    @cached_property
    def _lookup(self) -> Dict[Key, Element]:
        return dict(self.assignment)

    def __getitem__(self, key: Key) -> Element:
        return self._lookup[key]

    def table(self) -> Dict[Key, Element]:
        return dict(self._lookup)

    def describe(self) -> Dict[str, Any]:
        return {
            "frame": self.frame.describe(),
            "values": [[label(key[1] or key[0]), label(value)] for key, value in self.assignment],
        }


def solve_assignments(keys: Sequence[Key], domains: Dict[Key, Sequence[Element]], constraints: Sequence[Constraint]) -> Iterator[Dict[Key, Element]]:
    position = {key: i for i, key in enumerate(keys)}
    checks: List[List[Constraint]] = [[] for _ in keys]
    for constraint in constraints:
        first, _, second, _ = constraint
        if first not in position or second not in position:
            raise InputError(f"{label(first)} or {label(second)} is not a composable tuple", law="module action boundary")
        checks[max(position[first], position[second])].append(constraint)
    assignment: Dict[Key, Element] = {}

    def extend(i: int) -> Iterator[Dict[Key, Element]]:
        if i == len(keys):
            yield dict(assignment)
            return
        key = keys[i]
        for value in domains[key]:
            assignment[key] = value
            if all(op(assignment[k]) == op2(assignment[k2]) for k, op, k2, op2 in checks[i]):
                yield from extend(i + 1)
        assignment.pop(key, None)

    return extend(0)


def _cell(frame: Frame, values: Dict[Key, Element]) -> Cell:
    return Cell(frame, tuple((key, values[key]) for key in frame.tuples()))


def enumerate_cells(frame: Frame) -> Iterator[Cell]:
    """All cells in ``frame`` in canonical order."""
    keys = frame.tuples()
    domains = {key: frame.values(key) for key in keys}
    for values in solve_assignments(keys, domains, frame.constraints()):
        yield _cell(frame, values)


def check_cell(cell: Cell) -> Cell:
    """Raise :class:`InputError` unless the values are natural and balanced."""
    values = cell.table()
    for key in cell.frame.tuples():
        if values.get(key) not in cell.frame.values(key):
            raise InputError(f"value at {label(key)} leaves the target module", law="cell boundary")
    for first, op, second, op2 in cell.frame.constraints():
        if op(values[first]) != op2(values[second]):
            raise InputError(f"not natural at {label(first)} and {label(second)}", law="cell naturality")
    return cell


def compose_cells(outer: Cell, inners: Sequence[Cell]) -> Cell:
    """Multicategorical composite: each inner cell fills one source of ``outer``."""
    frame = outer.frame
    if len(inners) != frame.arity:
        raise BoundaryMismatch(f"{frame.arity} sources but {len(inners)} cells to plug in")
    if not inners:
        return outer
    for inner, module in zip(inners, frame.sources):
        if inner.frame.target is not module:
            raise BoundaryMismatch(f"inner cell lands in {inner.frame.target.label()}, expected {module.label()}")
    for first, second in zip(inners, inners[1:]):
        if first.frame.right != second.frame.left:
            raise BoundaryMismatch("adjacent inner cells disagree on their shared vertical functor")
    sources = tuple(m for inner in inners for m in inner.frame.sources)
    composite = Frame(
        sources,
        frame.target,
        compose_functors(frame.left, inners[0].frame.left),
        compose_functors(frame.right, inners[-1].frame.right),
        None if sources else inners[0].frame.base,
    )
    tables = [inner.table() for inner in inners]
    values: Dict[Key, Element] = {}
    for key in composite.tuples():
        objs, xs = key
        offset = 0
        ys: List[Element] = []
        for inner, table in zip(inners, tables):
            n = inner.frame.arity
            ys.append(table[(objs[offset : offset + n + 1], xs[offset : offset + n])])
            offset += n
        values[key] = outer[((ys[0][0],) + tuple(y[1] for y in ys), tuple(ys))]
    return _cell(composite, values)


# -- standard cells -------------------------------------------------------------------------------


def identity_cell(module: Profunctor) -> Cell:
    frame = Frame((module,), module, identity_functor(module.source), identity_functor(module.target))
    return _cell(frame, {key: key[1][0] for key in frame.tuples()})


def transformation_cell(alpha: NatTransform) -> Cell:
    """A transformation ``g ⇒ f`` of functors ``A → B`` as a nullary cell into the arrow module of B."""
    g, f = alpha.source, alpha.target
    frame = Frame((), unit_module(f.target), f, g, base=f.source)
    return _cell(frame, {((a,), ()): (f(a), g(a), alpha[a]) for a in f.source.objects})


def unit_cell(category: FiniteCategory) -> Cell:
    """The nullary cell ``ι`` into ``A^𝟚`` picking out identities."""
    return transformation_cell(identity_transformation(identity_functor(category)))


def restriction_cell(module: Profunctor, a: CatFunctor, b: CatFunctor) -> Cell:
    """``H(a-, b-) ⇒ H`` over ``(a, b)``."""
    restricted = restrict_profunctor(module, a, b)
    frame = Frame((restricted,), module, a, b)
    return _cell(frame, {key: key[1][0][2] for key in frame.tuples()})


def companion_cells(f: CatFunctor) -> Tuple[Cell, Cell]:
    """The unit ``A ⇒ B↓f`` over ``(1, f)`` and the restriction ``B↓f ⇒ B^𝟚`` over ``(f, 1)``."""
    A, B = f.source, f.target
    module = companion(f)
    unit = _cell(
        Frame((), module, identity_functor(A), f, base=A),
        {((a,), ()): (a, f(a), B.identity(f(a))) for a in A.objects},
    )
    frame = Frame((module,), unit_module(B), f, identity_functor(B))
    restriction = _cell(frame, {key: (f(key[1][0][0]), key[1][0][1], key[1][0][2]) for key in frame.tuples()})
    return unit, restriction


def conjoint_cells(f: CatFunctor) -> Tuple[Cell, Cell]:
    """The unit ``A ⇒ f↓B`` over ``(f, 1)`` and the restriction ``f↓B ⇒ B^𝟚`` over ``(1, f)``."""
    A, B = f.source, f.target
    module = conjoint(f)
    unit = _cell(
        Frame((), module, f, identity_functor(A), base=A),
        {((a,), ()): (f(a), a, B.identity(f(a))) for a in A.objects},
    )
    frame = Frame((module,), unit_module(B), identity_functor(B), f)
    restriction = _cell(frame, {key: (key[1][0][0], f(key[1][0][1]), key[1][0][2]) for key in frame.tuples()})
    return unit, restriction


def check_companion_identities(f: CatFunctor) -> Verdict:
    """Restriction after unit is the identity transformation of ``f``, for the companion and the conjoint."""
    expected = transformation_cell(identity_transformation(f))
    certificate = Certificate(exact=True)
    for side, (unit, restriction) in (("companion", companion_cells(f)), ("conjoint", conjoint_cells(f))):
        composite = compose_cells(restriction, [unit])
        if composite != expected:
            return Verdict.no(f"{side} cells do not compose to the identity of {f.label()}", {"side": side, "cell": composite}, certificate)
    return Verdict.yes("companion and conjoint cells compose to identities", None, certificate)


# -- universal properties -------------------------------------------------------------------------


def module_sequences(modules: Sequence[Profunctor], categories: Sequence[FiniteCategory], max_arity: int) -> Iterator[Tuple[Tuple[Profunctor, ...], Optional[FiniteCategory]]]:
    for category in categories:
        yield (), category
    chains: List[Tuple[Profunctor, ...]] = [(m,) for m in modules]
    for n in range(1, max_arity + 1):
        for chain in chains:
            yield chain, None
        if n < max_arity:
            chains = [chain + (m,) for chain in chains for m in modules if chain[-1].target == m.source]


def check_cartesian_cell(
    rho: Cell,
    modules: Optional[Sequence[Profunctor]] = None,
    categories: Optional[Sequence[FiniteCategory]] = None,
    max_arity: int = 2,
) -> Verdict:
    """Every cell over ``(f h, g k)`` factors uniquely through ``ρ`` over ``(h, k)``, for sources of arity at most ``max_arity``."""
    if rho.frame.arity != 1:
        raise InputError("a cartesian cell has exactly one source module")
    source, F, f, g = rho.frame.sources[0], rho.frame.target, rho.frame.left, rho.frame.right
    modules = tuple(modules) if modules is not None else (unit_module(source.source), source, unit_module(source.target))
    categories = tuple(categories) if categories is not None else (source.source, source.target)
    certificate = Certificate(exact=True, bound=max_arity, probes=tuple(m.label() for m in modules))
    checked = 0
    for sequence, base in module_sequences(modules, categories, max_arity):
        start = sequence[0].source if sequence else base
        end = sequence[-1].target if sequence else base
        for h in iter_functors(start, source.source):
            for k in iter_functors(end, source.target):
                factored = Counter(
                    compose_cells(rho, [theta]) for theta in enumerate_cells(Frame(sequence, source, h, k, base))
                )
                for chi in enumerate_cells(Frame(sequence, F, compose_functors(f, h), compose_functors(g, k), base)):
                    checked += 1
                    if factored[chi] != 1:
                        return Verdict.no(
                            f"a cell factors {factored[chi]} times through the restriction",
                            {"sources": [m.label() for m in sequence], "h": h, "k": k, "cell": chi, "factorizations": factored[chi]},
                            certificate,
                        )
    logger.debug("cartesian cell checked against %d cells", checked)
    return Verdict.yes(f"unique factorization of {checked} cells", None, certificate)


def check_cocartesian_unit(
    iota: Cell,
    modules: Optional[Sequence[Profunctor]] = None,
    max_flank: int = 2,
) -> Verdict:
    """Cells ``(L, R) ⇒ F`` correspond to cells ``(L, A^𝟚, R) ⇒ F`` by plugging ``ι`` between the flanks."""
    frame = iota.frame
    if frame.arity != 0 or not frame.left.is_identity() or not frame.right.is_identity():
        raise InputError("the unit cell is nullary with identity vertical functors")
    A, U = frame.base, frame.target
    if U.source != A or U.target != A:
        raise BoundaryMismatch(f"{U.label()} is not a module from {A.label()} to itself")
    modules = tuple(modules) if modules is not None else (U,)
    certificate = Certificate(exact=True, bound=max_flank, probes=tuple(m.label() for m in modules))
    lefts = [()] + [s for s, _ in module_sequences(modules, (), max_flank) if s[-1].target == A]
    rights = [()] + [s for s, _ in module_sequences(modules, (), max_flank) if s[0].source == A]
    checked = 0
    for left, right in itertools.product(lefts, rights):
        if len(left) + len(right) > max_flank:
            continue
        start = left[0].source if left else A
        end = right[-1].target if right else A
        plugs = [identity_cell(m) for m in left] + [iota] + [identity_cell(m) for m in right]
        for F in modules:
            for f in iter_functors(start, F.source):
                for g in iter_functors(end, F.target):
                    bigger = Frame(left + (U,) + right, F, f, g)
                    plugged = Counter(compose_cells(theta, plugs) for theta in enumerate_cells(bigger))
                    smaller = Frame(left + right, F, f, g, None if left or right else A)
                    for chi in enumerate_cells(smaller):
                        checked += 1
                        if plugged[chi] != 1:
                            return Verdict.no(
                                f"a cell extends along the unit {plugged[chi]} times",
                                {"left": [m.label() for m in left], "right": [m.label() for m in right], "cell": chi},
                                certificate,
                            )
    return Verdict.yes(f"unique extension of {checked} cells along the unit", None, certificate)


def yoneda_bijection(f: CatFunctor, g: CatFunctor) -> Verdict:
    """2-cells ``f ⇒ g`` against cells ``B↓f ⇒ B↓g`` and ``g↓B ⇒ f↓B`` over identities."""
    if f.source != g.source or f.target != g.target:
        raise BoundaryMismatch(f"{f.label()} and {g.label()} are not parallel")
    A, B = f.source, f.target
    transformations = list(iter_transformations(f, g))
    certificate = Certificate(exact=True)
    witness: Dict[str, int] = {"two_cells": len(transformations)}
    sides = (
        ("companion", companion(f), companion(g), lambda alpha, x: (x[0], x[1], B.compose(alpha[x[0]], x[2]))),
        ("conjoint", conjoint(g), conjoint(f), lambda alpha, x: (x[0], x[1], B.compose(x[2], alpha[x[1]]))),
    )
    for side, source, target, act in sides:
        frame = Frame((source,), target, identity_functor(source.source), identity_functor(source.target))
        cells = set(enumerate_cells(frame))
        images = [_cell(frame, {key: act(alpha, key[1][0]) for key in frame.tuples()}) for alpha in transformations]
        witness[f"{side}_cells"] = len(cells)
        if len(set(images)) != len(images):
            return Verdict.no(f"distinct 2-cells give the same {side} cell", witness, certificate)
        if set(images) != cells:
            return Verdict.no(f"some {side} cells do not come from 2-cells", witness, certificate)
    logger.debug("yoneda bijection %s ⇒ %s over %s: %d cells", f.label(), g.label(), A.label(), len(transformations))
    return Verdict.yes("2-cells correspond to cells between companions and between conjoints", witness, certificate)
