"""Exact finite-category instance of the cosmos interface."""
from cosmos.cat.category import (
    CatFunctor,
    FiniteCategory,
    NatTransform,
    boolean_lattice,
    chaotic,
    cyclic_group,
    discrete,
    free_isomorphism,
    ordinal,
    poset,
    terminal_category,
)
from cosmos.cat.constructions import arrow_category, comma_cat_oracle, grothendieck_construction
from cosmos.cat.cosmos import CatCosmos
from cosmos.cat.fibrations import (
    is_cartesian_2cell,
    is_cartesian_fibration,
    is_cocartesian_fibration,
    is_groupoidal_cartesian_fibration,
    is_groupoidal_cocartesian_fibration,
)
from cosmos.cat.limits import colimit_oracle, limit_oracle

__all__ = [
    "CatCosmos",
    "CatFunctor",
    "FiniteCategory",
    "NatTransform",
    "arrow_category",
    "boolean_lattice",
    "chaotic",
    "colimit_oracle",
    "comma_cat_oracle",
    "cyclic_group",
    "discrete",
    "free_isomorphism",
    "grothendieck_construction",
    "is_cartesian_2cell",
    "is_cartesian_fibration",
    "is_cocartesian_fibration",
    "is_groupoidal_cartesian_fibration",
    "is_groupoidal_cocartesian_fibration",
    "limit_oracle",
    "ordinal",
    "poset",
    "terminal_category",
]
