"""The interval 𝕀: the nerve of the free isomorphism."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from cosmos.cat.category import free_isomorphism
from cosmos.sset.constructions import nerve, point_map, to_terminal
from cosmos.sset.simplicial import FiniteSimplicialSet, SimplicialMap


@dataclass(frozen=True)
class Interval:
    """𝕀 with its endpoint inclusions and the collapse to Δ^0."""

    space: FiniteSimplicialSet
    start: SimplicialMap
    end: SimplicialMap
    collapse: SimplicialMap


def interval(dims: Optional[int] = None) -> Interval:
    space = nerve(free_isomorphism(), dims=dims, name="𝕀")
    return Interval(space, point_map(space, "a"), point_map(space, "b"), to_terminal(space))
