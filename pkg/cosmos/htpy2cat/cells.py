"""Composition and whiskering of 2-cells in the homotopy 2-category of an instance."""
from __future__ import annotations

from typing import Any, Optional

from cosmos.cat.category import FiniteCategory, label
from cosmos.core.base import TwoCategory, TwoCell
from cosmos.core.errors import BoundaryMismatch, InstanceMismatch


def hom_category(cosmos: TwoCategory, source: Any, target: Any) -> FiniteCategory:
    """hom(A, B): the functor category in Cat, h(Fun(A, B)) in qCat."""
    return cosmos.hom(source, target)


def _same_instance(*cells: TwoCell) -> TwoCategory:
    cosmos = cells[0].cosmos
    for cell in cells[1:]:
        if cell.cosmos is not cosmos:
            raise InstanceMismatch("2-cells from different cosmos instances")
    return cosmos


def vcompose(beta: TwoCell, alpha: TwoCell) -> TwoCell:
    """``β · α``; the qCat composite comes from a Λ^{2,1} filler in the function complex."""
    cosmos = _same_instance(beta, alpha)
    if alpha.target != beta.source:
        raise BoundaryMismatch(f"cannot compose {beta.label()} after {alpha.label()}")
    return cosmos.vertical(beta, alpha)


def whisker(h: Optional[Any], alpha: TwoCell, k: Optional[Any] = None) -> TwoCell:
    """``h α k``; ``None`` stands for an identity 1-cell."""
    cosmos = alpha.cosmos
    cell = alpha
    if k is not None:
        if k.target != cell.domain:
            raise BoundaryMismatch(f"cannot whisker {cell.label()} by {label(k)} on the right")
        cell = cosmos.whisker_right(cell, k)
    if h is not None:
        if h.source != cell.codomain:
            raise BoundaryMismatch(f"cannot whisker {cell.label()} by {label(h)} on the left")
        cell = cosmos.whisker_left(h, cell)
    return cell


def hcompose(beta: TwoCell, alpha: TwoCell) -> TwoCell:
    """``β ∘ α = (β f′) · (g α)`` for ``α: f ⇒ f′: A → B`` and ``β: g ⇒ g′: B → C``."""
    _same_instance(beta, alpha)
    return vcompose(whisker(None, beta, alpha.target), whisker(beta.source, alpha))


def identity_cell(cosmos: TwoCategory, f: Any) -> TwoCell:
    return cosmos.identity_cell(f)


def inverse(alpha: TwoCell) -> TwoCell:
    return alpha.cosmos.inverse(alpha)


def is_invertible(alpha: TwoCell) -> bool:
    return alpha.cosmos.is_invertible(alpha)


def is_identity(alpha: TwoCell) -> bool:
    return alpha.source == alpha.target and alpha == alpha.cosmos.identity_cell(alpha.source)
