"""The virtual equipment of modules between finite categories."""
from cosmos.equipment.cells import (
    Cell,
    Frame,
    check_cartesian_cell,
    check_cocartesian_unit,
    check_companion_identities,
    companion_cells,
    compose_cells,
    conjoint_cells,
    enumerate_cells,
    identity_cell,
    restriction_cell,
    transformation_cell,
    unit_cell,
    yoneda_bijection,
)
from cosmos.equipment.kan import (
    certify_pointwise_ran,
    check_left_extension_2cat,
    check_right_extension_2cat,
    check_right_extension_of_modules,
    pointwise_lan,
    pointwise_ran,
    right_extension_of_modules,
)
from cosmos.equipment.modules import (
    ModuleSpan,
    Profunctor,
    comma_module,
    companion,
    conjoint,
    from_span,
    is_module,
    restrict_module,
    restrict_profunctor,
    to_span,
    unit_module,
)

__all__ = [
    "Cell",
    "Frame",
    "ModuleSpan",
    "Profunctor",
    "certify_pointwise_ran",
    "check_cartesian_cell",
    "check_cocartesian_unit",
    "check_companion_identities",
    "check_left_extension_2cat",
    "check_right_extension_2cat",
    "check_right_extension_of_modules",
    "comma_module",
    "companion",
    "companion_cells",
    "compose_cells",
    "conjoint",
    "conjoint_cells",
    "enumerate_cells",
    "from_span",
    "identity_cell",
    "is_module",
    "pointwise_lan",
    "pointwise_ran",
    "restrict_module",
    "restrict_profunctor",
    "restriction_cell",
    "right_extension_of_modules",
    "to_span",
    "transformation_cell",
    "unit_cell",
    "unit_module",
    "yoneda_bijection",
]
