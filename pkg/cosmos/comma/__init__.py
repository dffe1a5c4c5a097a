"""Comma objects and the characterizations they support."""
from cosmos.comma.characterizations import (
    AbsLiftingData,
    check_absolute_left_lifting,
    check_absolute_right_lifting,
    check_adjunction_via_comma,
    check_colimit,
    check_limit,
    check_right_adjoint_preserves_limit,
    cocone_category,
    cone_category,
    counit_as_absolute_lifting,
    is_groupoidal,
    is_initial_element,
    is_terminal_element,
)
from cosmos.comma.equivalence import Span, fiber_counts, fibered_equivalence_search
from cosmos.comma.objects import (
    CommaObject,
    check_comma_conservativity,
    check_smothering_comparison,
    comma,
    hom_space,
    induce_1cell,
    induce_2cell,
)

__all__ = [
    "AbsLiftingData",
    "CommaObject",
    "Span",
    "check_absolute_left_lifting",
    "check_absolute_right_lifting",
    "check_adjunction_via_comma",
    "check_colimit",
    "check_comma_conservativity",
    "check_limit",
    "check_right_adjoint_preserves_limit",
    "check_smothering_comparison",
    "cocone_category",
    "comma",
    "cone_category",
    "counit_as_absolute_lifting",
    "fiber_counts",
    "fibered_equivalence_search",
    "hom_space",
    "induce_1cell",
    "induce_2cell",
    "is_groupoidal",
    "is_initial_element",
    "is_terminal_element",
]
