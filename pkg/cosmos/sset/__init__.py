"""Finite simplicial sets, their limits, function complexes and lifting search."""
from cosmos.sset.constructions import (
    LimitSimplicialSet,
    boundary,
    horn,
    nerve,
    product,
    pullback,
    simplex_map,
    standard_simplex,
    truncate,
)
from cosmos.sset.exponential import FunctionComplex, exponential
from cosmos.sset.search import LiftingProblem, find_isomorphism, iter_maps, solve_lifting
from cosmos.sset.simplicial import FiniteSimplicialSet, FormalSimplex, SimplicialMap, compose, identity_map

__all__ = [
    "FiniteSimplicialSet",
    "FormalSimplex",
    "FunctionComplex",
    "LiftingProblem",
    "LimitSimplicialSet",
    "SimplicialMap",
    "boundary",
    "compose",
    "exponential",
    "find_isomorphism",
    "horn",
    "identity_map",
    "iter_maps",
    "nerve",
    "product",
    "pullback",
    "simplex_map",
    "solve_lifting",
    "standard_simplex",
    "truncate",
]
