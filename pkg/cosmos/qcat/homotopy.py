"""Homotopy categories of quasi-categories."""
from __future__ import annotations

import logging
from typing import Callable, Dict, Hashable, List, Optional, Tuple

from cosmos.cat.category import CatFunctor, FiniteCategory
from cosmos.core.errors import CharacterizationDisagreement, InputError, TruncationError
from cosmos.sset.simplicial import FiniteSimplicialSet, FormalSimplex, SimplicialMap

logger = logging.getLogger(__name__)


class _UnionFind:
    def __init__(self) -> None:
        self.parent: Dict[FormalSimplex, FormalSimplex] = {}

    def find(self, x: FormalSimplex) -> FormalSimplex:
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: FormalSimplex, y: FormalSimplex) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


class HomotopyCategory(FiniteCategory):
    """h(A): vertices and edges modulo 2-simplices with a degenerate outer face.

    Arrows are the least edges of their classes in canonical order; identities
    are the degenerate edges ``s0(v)``.
    """

    def __init__(
        self,
        space: FiniteSimplicialSet,
        objects: List[Hashable],
        ends: Dict[FormalSimplex, Tuple[Hashable, Hashable]],
        identities: Dict[Hashable, FormalSimplex],
        table: Dict[Tuple[FormalSimplex, FormalSimplex], FormalSimplex],
        classes: Dict[FormalSimplex, FormalSimplex],
        name: str = "",
    ) -> None:
        super().__init__(objects, ends, identities, table, name=name)
        self.space = space
        self.classes = classes

    def arrow_of(self, edge: FormalSimplex) -> FormalSimplex:
        """The arrow represented by a (possibly degenerate) 1-simplex."""
        try:
            return self.classes[edge]
        except KeyError as exc:
            raise InputError(f"{edge.label()} is not a 1-simplex of {self.space.label()}") from exc

    def with_objects(self, rename: Callable[[Hashable], Hashable], name: str = "") -> FiniteCategory:
        """The same category with objects renamed, arrows kept."""
        mapped = {a: (rename(x), rename(y)) for a, (x, y) in self._ends.items()}
        ids = {rename(x): i for x, i in self._ids.items()}
        return FiniteCategory([rename(x) for x in self.objects], mapped, ids, self.compose, name=name or self.name)


def homotopy_category(space: FiniteSimplicialSet, *, self_test: bool = True) -> HomotopyCategory:
    """Compute h(A) for a quasi-category stored at least to dimension 2."""
    if space.truncated and space.dims < 2:
        raise TruncationError(f"{space.label()} must be stored to dimension 2 for its homotopy category")
    uf = _UnionFind()
    edges = space.formal_simplices(1)
    for e in edges:
        uf.find(e)
    triangles = space.formal_simplices(2)
    for x in triangles:
        d0, d1, d2 = space.boundary(x)
        if d0.is_degenerate:
            uf.union(d1, d2)
        if d2.is_degenerate:
            uf.union(d1, d0)
    members: Dict[FormalSimplex, List[FormalSimplex]] = {}
    for e in edges:
        members.setdefault(uf.find(e), []).append(e)
    classes: Dict[FormalSimplex, FormalSimplex] = {}
    for group in members.values():
        rep = min(group, key=space.key)
        for e in group:
            classes[e] = rep
    objects = list(space.nondegenerate(0))
    ends: Dict[FormalSimplex, Tuple[Hashable, Hashable]] = {}
    for e in edges:
        rep = classes[e]
        if rep not in ends:
            ends[rep] = (space.face_of(rep, 1).base, space.face_of(rep, 0).base)
    identities = {v: FormalSimplex(v, (0, 0)) for v in objects}
    table: Dict[Tuple[FormalSimplex, FormalSimplex], FormalSimplex] = {}
    for x in triangles:
        d0, d1, d2 = space.boundary(x)
        key = (classes[d0], classes[d2])
        if d0 == classes[d0] and d2 == classes[d2] and key not in table:
            table[key] = classes[d1]
    name = f"h({space.label()})"
    for g in ends:
        for f in ends:
            if ends[f][1] == ends[g][0] and (g, f) not in table and not (
                g == identities[ends[g][0]] or f == identities[ends[f][0]]
            ):
                raise InputError(
                    f"no 2-simplex composes {f.label()} with {g.label()} in {space.label()}",
                    law="inner horn",
                )
    category = HomotopyCategory(space, objects, ends, identities, table, classes, name=name)
    if self_test:
        composition_is_well_defined(category, triangles)
    logger.debug("%s: %d objects, %d arrows", name, len(objects), len(ends))
    return category


def composition_is_well_defined(category: HomotopyCategory, triangles: Optional[Tuple[FormalSimplex, ...]] = None) -> bool:
    """Every 2-simplex must witness the chosen composite of its edge classes."""
    space = category.space
    for x in triangles if triangles is not None else space.formal_simplices(2):
        d0, d1, d2 = space.boundary(x)
        expected = category.compose(category.arrow_of(d0), category.arrow_of(d2))
        if category.arrow_of(d1) != expected:
            raise CharacterizationDisagreement(
                f"composition in {category.label()} depends on the filler: {x.label()} gives "
                f"{category.arrow_of(d1).label()}, chosen filler gives {expected.label()}"
            )
    return True


def homotopy_functor(f: SimplicialMap, source: HomotopyCategory, target: HomotopyCategory) -> CatFunctor:
    """h(f): h(A) → h(B)."""
    on_objects = {v: f(FormalSimplex.of(v, 0)).base for v in source.objects}
    on_arrows = {a: target.arrow_of(f(a)) for a in source.arrows}
    return CatFunctor(source, target, on_objects, on_arrows, name=f"h({f.label()})")
