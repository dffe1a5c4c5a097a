"""The homotopy 2-category: 2-cell algebra, adjunctions, equivalences and smothering functors."""
from cosmos.htpy2cat.adjunctions import (
    AdjunctionData,
    check_adjunction,
    check_equivalence_2cat,
    compare_left_adjoints,
    compose_adjunctions,
    equivalence_as_adjunctions,
    find_adjunction,
    induced_adjunction_checks,
    promote_to_adjoint_equivalence,
    transport_left_adjoint,
)
from cosmos.htpy2cat.cells import hcompose, hom_category, identity_cell, inverse, is_invertible, vcompose, whisker
from cosmos.htpy2cat.smothering import check_smothering, check_weak_cotensor, weak_cotensor_comparison

__all__ = [
    "AdjunctionData",
    "check_adjunction",
    "check_equivalence_2cat",
    "check_smothering",
    "check_weak_cotensor",
    "compare_left_adjoints",
    "compose_adjunctions",
    "equivalence_as_adjunctions",
    "find_adjunction",
    "hcompose",
    "hom_category",
    "identity_cell",
    "induced_adjunction_checks",
    "inverse",
    "is_invertible",
    "promote_to_adjoint_equivalence",
    "transport_left_adjoint",
    "vcompose",
    "whisker",
]
