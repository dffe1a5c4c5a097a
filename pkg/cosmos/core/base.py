"""Abstract 2-category and cosmos interfaces shared by the Cat and qCat instances."""
from __future__ import annotations

import abc
from dataclasses import dataclass
from typing import Any, Callable, Dict, Hashable, Iterator, List, Tuple

from cosmos.cat.category import CatFunctor, FiniteCategory, label
from cosmos.core.errors import BoundaryMismatch, InstanceMismatch
from cosmos.core.models import Verdict


@dataclass(frozen=True)
class TwoCell:
    """A 2-cell ``source ⇒ target`` between parallel 1-cells, named by an arrow of their hom-category."""

    cosmos: "TwoCategory"
    source: Any
    target: Any
    arrow: Hashable

    @property
    def domain(self) -> Any:
        return self.source.source

    @property
    def codomain(self) -> Any:
        return self.source.target

    def label(self) -> str:
        return f"{label(self.arrow)}: {label(self.source)} ⇒ {label(self.target)}"

    def describe(self) -> Dict[str, Any]:
        return {"source": label(self.source), "target": label(self.target), "cell": label(self.arrow)}


@dataclass(frozen=True)
class LimitCone:
    """A limit apex with its legs and the pairing into it."""

    apex: Any
    legs: Tuple[Any, ...]
    pairing: Callable[..., Any]

    def pair(self, *maps: Any) -> Any:
        return self.pairing(*maps)


@dataclass(frozen=True)
class ArrowObject:
    """The cotensor A^𝟚 with its endpoint evaluations."""

    apex: Any
    ev0: Any
    ev1: Any


class TwoCategory(abc.ABC):
    """A strict 2-category whose hom-categories are finite."""

    kind: str = "2-category"

    @abc.abstractmethod
    def hom(self, source: Any, target: Any) -> FiniteCategory:
        """The hom-category; its objects are 1-cells, its arrows name 2-cells."""

    @abc.abstractmethod
    def identity(self, obj: Any) -> Any:
        """The identity 1-cell."""

    @abc.abstractmethod
    def compose(self, g: Any, f: Any) -> Any:
        """The composite 1-cell ``g ∘ f``."""

    @abc.abstractmethod
    def postcompose(self, h: Any, obj: Any) -> CatFunctor:
        """``h ∘ -: hom(obj, B) → hom(obj, C)`` for ``h: B → C``."""

    @abc.abstractmethod
    def precompose(self, k: Any, obj: Any) -> CatFunctor:
        """``- ∘ k: hom(A, obj) → hom(A′, obj)`` for ``k: A′ → A``."""

    # -- derived structure ------------------------------------------------------------

    def owns(self, cell: TwoCell) -> None:
        if cell.cosmos is not self:
            raise InstanceMismatch(f"2-cell {cell.label()} belongs to another cosmos instance")

    def identity_cell(self, f: Any) -> TwoCell:
        return TwoCell(self, f, f, self.hom(f.source, f.target).identity(f))

    def cell(self, source: Any, target: Any, arrow: Hashable) -> TwoCell:
        hom = self.hom(source.source, source.target)
        if not hom.has_arrow(arrow) or hom.ends(arrow) != (source, target):
            raise BoundaryMismatch(f"{label(arrow)} is not a 2-cell {label(source)} ⇒ {label(target)}")
        return TwoCell(self, source, target, arrow)

    def cells(self, source: Any, target: Any) -> Iterator[TwoCell]:
        for arrow in self.hom(source.source, source.target).hom(source, target):
            yield TwoCell(self, source, target, arrow)

    def one_cells(self, source: Any, target: Any) -> Tuple[Any, ...]:
        return self.hom(source, target).objects

    def is_invertible(self, alpha: TwoCell) -> bool:
        return self.hom(alpha.domain, alpha.codomain).is_iso(alpha.arrow)

    def inverse(self, alpha: TwoCell) -> TwoCell:
        hom = self.hom(alpha.domain, alpha.codomain)
        inverse = hom.inverse(alpha.arrow)
        if inverse is None:
            raise BoundaryMismatch(f"2-cell {alpha.label()} is not invertible")
        return TwoCell(self, alpha.target, alpha.source, inverse)

    def isomorphic(self, f: Any, g: Any) -> bool:
        return any(self.is_invertible(c) for c in self.cells(f, g))

    def vertical(self, beta: TwoCell, alpha: TwoCell) -> TwoCell:
        """``β · α`` for composable cells, composed in the hom-category."""
        hom = self.hom(alpha.domain, alpha.codomain)
        return TwoCell(self, alpha.source, beta.target, hom.compose(beta.arrow, alpha.arrow))

    def whisker_left(self, h: Any, alpha: TwoCell) -> TwoCell:
        """``h α`` through the functor ``h ∘ -`` on hom-categories."""
        functor = self.postcompose(h, alpha.domain)
        return TwoCell(self, self.compose(h, alpha.source), self.compose(h, alpha.target), functor.arrow(alpha.arrow))

    def whisker_right(self, alpha: TwoCell, k: Any) -> TwoCell:
        """``α k`` through the functor ``- ∘ k`` on hom-categories."""
        functor = self.precompose(k, alpha.codomain)
        return TwoCell(self, self.compose(alpha.source, k), self.compose(alpha.target, k), functor.arrow(alpha.arrow))


class Cosmos(TwoCategory):
    """The limit structure of a cosmos instance, over its homotopy 2-category."""

    exact: bool = False
    one_cell_type: type = object

    def owns_maps(self, *maps: Any) -> None:
        """Raise :class:`InstanceMismatch` unless every map is a 1-cell of this instance."""
        for m in maps:
            if not isinstance(m, self.one_cell_type):
                raise InstanceMismatch(f"{label(m)} is not a 1-cell of the {self.kind} instance")

    @abc.abstractmethod
    def terminal(self) -> Any:
        """The terminal object 1."""

    @abc.abstractmethod
    def to_terminal(self, obj: Any) -> Any:
        """The unique 1-cell ``obj → 1``."""

    @abc.abstractmethod
    def elements(self, obj: Any) -> List[Any]:
        """The 1-cells ``1 → obj`` in canonical order."""

    @abc.abstractmethod
    def element(self, obj: Any, x: Any) -> Any:
        """The element ``1 → obj`` named by an object, vertex or 1-cell of a cotensor."""

    @abc.abstractmethod
    def product(self, left: Any, right: Any) -> LimitCone:
        """Binary product with its projections."""

    @abc.abstractmethod
    def pullback(self, f: Any, g: Any) -> LimitCone:
        """Pullback of a cospan; legs go to ``f.source`` and ``g.source``."""

    @abc.abstractmethod
    def arrow_object(self, obj: Any) -> ArrowObject:
        """The cotensor ``obj^𝟚`` with endpoint evaluations."""

    @abc.abstractmethod
    def shape(self, category: FiniteCategory) -> Any:
        """The object of this instance standing for a finite category (itself, or its nerve)."""

    @abc.abstractmethod
    def cotensor(self, shape: Any, obj: Any) -> Any:
        """The cotensor ``obj^shape``."""

    @abc.abstractmethod
    def cotensor_map(self, shape: Any, h: Any) -> Any:
        """``h^shape: A^shape → B^shape``."""

    @abc.abstractmethod
    def diagonal(self, shape: Any, obj: Any) -> Any:
        """The constant-diagram 1-cell ``obj → obj^shape``."""

    @abc.abstractmethod
    def cotensor_cell(self, k: Any) -> TwoCell:
        """The 2-cell ``ev0 k ⇒ ev1 k`` encoded by ``k: X → obj^𝟚``."""

    @abc.abstractmethod
    def cell_as_cotensor(self, alpha: TwoCell) -> Any:
        """A 1-cell ``X → obj^𝟚`` encoding ``alpha`` strictly."""

    @abc.abstractmethod
    def is_isofibration(self, p: Any) -> Verdict:
        """Whether a 1-cell is one of the specified isofibrations."""

    def product_map(self, f: Any, g: Any) -> Any:
        """``f × g`` between binary products."""
        source = self.product(f.source, g.source)
        target = self.product(f.target, g.target)
        return target.pair(self.compose(f, source.legs[0]), self.compose(g, source.legs[1]))
