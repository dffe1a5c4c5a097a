"""JSON documents describing categories, simplicial sets and the maps between them."""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field, model_validator

from cosmos.cat.category import (
    CatFunctor,
    FiniteCategory,
    NatTransform,
    boolean_lattice,
    chaotic,
    cyclic_group,
    discrete,
    empty_category,
    free_isomorphism,
    from_table,
    label,
    ordinal,
    poset,
    terminal_category,
)
from cosmos.core.errors import InputError
from cosmos.sset.constructions import boundary, horn, nerve, standard_simplex
from cosmos.sset.simplicial import FiniteSimplicialSet, FormalSimplex, SimplicialMap

logger = logging.getLogger(__name__)

Ref = Union[int, str]

BUILTINS: Dict[str, Callable[..., FiniteCategory]] = {
    "terminal": terminal_category,
    "empty": empty_category,
    "iso": free_isomorphism,
    "cyclic": cyclic_group,
    "discrete": discrete,
    "chaotic": chaotic,
    "boolean_lattice": boolean_lattice,
}


def _lookup(table: Dict[str, Any], name: str, kind: str) -> Any:
    try:
        return table[name]
    except KeyError:
        raise InputError(f"unknown {kind} '{name}'", law="references") from None


def _by_label(values: Any, ref: Ref, kind: str, owner: str) -> Any:
    for value in values:
        if label(value) == str(ref):
            return value
    raise InputError(f"{kind} {ref!r} not found in {owner}", law="references")


class ArrowModel(BaseModel):
    id: str
    src: Ref
    tgt: Ref


class CategoryModel(BaseModel):
    """One of: explicit ``objects``/``arrows``/``comp``/``ids``, ``objects`` with an ``order``,
    an ``ordinal``, or a ``builtin`` with ``args``."""

    objects: Optional[List[Ref]] = None
    arrows: List[ArrowModel] = Field(default_factory=list)
    comp: List[Tuple[str, str, str]] = Field(default_factory=list, description="Composites [g, f, g∘f]")
    ids: Dict[str, str] = Field(default_factory=dict)
    order: Optional[List[Tuple[Ref, Ref]]] = Field(default=None, description="Generating relations x ≤ y")
    ordinal: Optional[int] = Field(default=None, ge=0)
    builtin: Optional[str] = None
    args: List[Any] = Field(default_factory=list)

    @model_validator(mode="after")
    def _one_form(self) -> CategoryModel:
        forms = [self.objects is not None, self.ordinal is not None, self.builtin is not None]
        if sum(forms) != 1:
            raise ValueError("a category needs exactly one of 'objects', 'ordinal' or 'builtin'")
        return self

    def build(self, name: str) -> FiniteCategory:
        if self.ordinal is not None:
            return ordinal(self.ordinal)
        if self.builtin is not None:
            try:
                maker = BUILTINS[self.builtin]
            except KeyError:
                raise InputError(f"unknown builtin category '{self.builtin}'", law="references") from None
            return maker(*self.args)
        objects = list(self.objects)
        if self.order is not None:
            below = {x: {x} for x in objects}
            for x, y in self.order:
                below[_by_label(objects, y, "object", name)].add(_by_label(objects, x, "object", name))
            changed = True
            while changed:
                changed = False
                for y in objects:
                    closure = set().union(*(below[x] for x in below[y]))
                    if closure != below[y]:
                        below[y], changed = closure, True
            return poset(objects, lambda x, y: x in below[y], name=name)
        ids = {_by_label(objects, x, "object", name): i for x, i in self.ids.items()}
        for x in objects:
            ids.setdefault(x, f"id_{label(x)}")
        arrows = [(a.id, _by_label(objects, a.src, "object", name), _by_label(objects, a.tgt, "object", name)) for a in self.arrows]
        return from_table(objects, arrows, self.comp, ids, name=name)


class FaceModel(BaseModel):
    base: str
    degens: List[int] = Field(default_factory=list)


Face = Union[str, FaceModel]


class SimplicialSetModel(BaseModel):
    """Explicit levels of nondegenerate simplices with their faces, or a standard construction."""

    simplices: Optional[List[List[str]]] = None
    faces: Dict[str, List[Face]] = Field(default_factory=dict)
    dims: Optional[int] = Field(default=None, ge=0)
    truncated: bool = False
    coskeletal: Optional[int] = None
    nerve: Optional[str] = Field(default=None, description="Name of a category in the same document")
    standard_simplex: Optional[int] = Field(default=None, ge=0)
    horn: Optional[Tuple[int, int]] = None
    boundary: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _one_form(self) -> SimplicialSetModel:
        forms = [self.simplices, self.nerve, self.standard_simplex, self.horn, self.boundary]
        if sum(form is not None for form in forms) != 1:
            raise ValueError("a simplicial set needs exactly one of 'simplices', 'nerve', 'standard_simplex', 'horn' or 'boundary'")
        return self

    def build(self, name: str, categories: Dict[str, FiniteCategory]) -> FiniteSimplicialSet:
        if self.nerve is not None:
            return nerve(_lookup(categories, self.nerve, "category"), self.dims)
        if self.standard_simplex is not None:
            return standard_simplex(self.standard_simplex)
        if self.horn is not None:
            return horn(*self.horn)[0]
        if self.boundary is not None:
            return boundary(self.boundary)[0]
        dims = {sid: n for n, level in enumerate(self.simplices) for sid in level}
        faces = {sid: [formal_simplex(face, dims) for face in listed] for sid, listed in self.faces.items()}
        return FiniteSimplicialSet(
            self.simplices,
            faces,
            dims=self.dims,
            truncated=self.truncated,
            coskeletal=self.coskeletal,
            name=name,
        )


def formal_simplex(face: Face, dims: Dict[str, int]) -> FormalSimplex:
    base = face if isinstance(face, str) else face.base
    if base not in dims:
        raise InputError(f"face refers to unknown simplex {base!r}", law="stored faces")
    if isinstance(face, str):
        return FormalSimplex.of(base, dims[base])
    return FormalSimplex.from_word(base, dims[base], face.degens)


class FunctorModel(BaseModel):
    source: str
    target: str
    objects: Dict[str, Ref]
    arrows: Dict[str, str] = Field(default_factory=dict, description="Omitted arrows are inferred from singleton homs")

    def build(self, name: str, categories: Dict[str, FiniteCategory]) -> CatFunctor:
        A = _lookup(categories, self.source, "category")
        B = _lookup(categories, self.target, "category")
        on_objects = {_by_label(A.objects, x, "object", A.label()): _by_label(B.objects, y, "object", B.label()) for x, y in self.objects.items()}
        on_arrows = {_by_label(A.arrows, a, "arrow", A.label()): _by_label(B.arrows, b, "arrow", B.label()) for a, b in self.arrows.items()}
        for a in A.arrows:
            if a in on_arrows or A.src(a) not in on_objects or A.tgt(a) not in on_objects:
                continue
            hom = B.hom(on_objects[A.src(a)], on_objects[A.tgt(a)])
            if len(hom) == 1:
                on_arrows[a] = hom[0]
        return CatFunctor(A, B, on_objects, on_arrows, name=name).validate()


class TransformationModel(BaseModel):
    source: str
    target: str
    components: Dict[str, str]

    def build(self, functors: Dict[str, CatFunctor]) -> NatTransform:
        f = _lookup(functors, self.source, "functor")
        g = _lookup(functors, self.target, "functor")
        A, B = f.source, f.target
        components = {_by_label(A.objects, x, "object", A.label()): _by_label(B.arrows, a, "arrow", B.label()) for x, a in self.components.items()}
        return NatTransform(f, g, components).validate()


class SimplicialMapModel(BaseModel):
    source: str
    target: str
    assignment: Dict[str, Face]

    def build(self, name: str, spaces: Dict[str, FiniteSimplicialSet]) -> SimplicialMap:
        X = _lookup(spaces, self.source, "simplicial set")
        Y = _lookup(spaces, self.target, "simplicial set")
        dims = {sid: Y.dim(sid) for sid in Y.ids()}
        assignment = {sid: formal_simplex(face, dims) for sid, face in self.assignment.items()}
        return SimplicialMap(X, Y, assignment, name=name).validate()


class CosmosDocument(BaseModel):
    """A named collection of input data; later sections may refer to earlier ones by name."""

    categories: Dict[str, CategoryModel] = Field(default_factory=dict)
    spaces: Dict[str, SimplicialSetModel] = Field(default_factory=dict)
    functors: Dict[str, FunctorModel] = Field(default_factory=dict)
    transformations: Dict[str, TransformationModel] = Field(default_factory=dict)
    maps: Dict[str, SimplicialMapModel] = Field(default_factory=dict)
    parameters: Dict[str, Any] = Field(default_factory=dict)


@dataclass
class Workspace:
    """A document built into validated toolkit objects."""

    categories: Dict[str, FiniteCategory] = field(default_factory=dict)
    spaces: Dict[str, FiniteSimplicialSet] = field(default_factory=dict)
    functors: Dict[str, CatFunctor] = field(default_factory=dict)
    transformations: Dict[str, NatTransform] = field(default_factory=dict)
    maps: Dict[str, SimplicialMap] = field(default_factory=dict)
    parameters: Dict[str, Any] = field(default_factory=dict)

    def first(self, kind: str) -> Any:
        items = list(getattr(self, kind).values())
        if not items:
            raise InputError(f"document has no {kind}", law="references")
        return items[0]

    def pick(self, kind: str, roles: Tuple[str, ...], count: int) -> List[Any]:
        """Items named by role when every role is present, otherwise the first ``count`` in document order."""
        table: Dict[str, Any] = getattr(self, kind)
        if all(role in table for role in roles[:count]):
            return [table[role] for role in roles[:count]]
        items = list(table.values())
        if len(items) < count:
            raise InputError(f"expected {count} {kind}, found {len(items)}", law="references")
        return items[:count]


def build_document(document: CosmosDocument) -> Workspace:
    """Build and validate every item; raises :class:`InputError` naming the violated law."""
    workspace = Workspace(parameters=dict(document.parameters))
    for name, model in document.categories.items():
        workspace.categories[name] = model.build(name).validate()
    for name, model in document.spaces.items():
        workspace.spaces[name] = model.build(name, workspace.categories).validate()
    for name, model in document.functors.items():
        workspace.functors[name] = model.build(name, workspace.categories)
    for name, model in document.transformations.items():
        workspace.transformations[name] = model.build(workspace.functors)
    for name, model in document.maps.items():
        workspace.maps[name] = model.build(name, workspace.spaces)
    logger.debug(
        "built document: %d categories, %d spaces, %d functors",
        len(workspace.categories),
        len(workspace.spaces),
        len(workspace.functors),
    )
    return workspace


def load_document(path: Union[str, Path]) -> Workspace:
    """Read, parse and build a JSON document from disk."""
    text = Path(path).read_text(encoding="utf-8")
    return build_document(CosmosDocument.model_validate(json.loads(text)))
