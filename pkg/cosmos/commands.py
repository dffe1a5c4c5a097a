"""Named checks run against a built document; shared by the command line and the HTTP layer."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Tuple

from cosmos.api.schemas import Workspace
from cosmos.cat.category import label
from cosmos.cat.fibrations import (
    is_cartesian_fibration,
    is_cocartesian_fibration,
    is_groupoidal_cartesian_fibration,
    is_groupoidal_cocartesian_fibration,
)
from cosmos.cat.limits import limit_oracle
from cosmos.comma.characterizations import check_adjunction_via_comma, check_limit
from cosmos.comma.objects import comma
from cosmos.core.base import Cosmos
from cosmos.core.errors import InputError, LimitMissing
from cosmos.core.models import Budget, Certificate, Verdict
from cosmos.equipment.cells import yoneda_bijection
from cosmos.equipment.kan import check_left_extension_2cat, check_right_extension_2cat, pointwise_lan, pointwise_ran
from cosmos.equipment.modules import ModuleSpan, is_module
from cosmos.htpy2cat.adjunctions import AdjunctionData, check_adjunction, check_equivalence_2cat, find_adjunction
from cosmos.htpy2cat.smothering import check_smothering
from cosmos.qcat.fibrations import is_kan, is_quasicategory
from cosmos.qcat.homotopy import composition_is_well_defined, homotopy_category
from cosmos.runtime import get_cat_cosmos, get_qcat_cosmos
from cosmos.sset.constructions import nerve
from cosmos.sset.simplicial import FiniteSimplicialSet

logger = logging.getLogger(__name__)

VARIANTS: Dict[str, Callable[..., Verdict]] = {
    "cartesian": is_cartesian_fibration,
    "cocartesian": is_cocartesian_fibration,
    "groupoidal-cartesian": is_groupoidal_cartesian_fibration,
    "groupoidal-cocartesian": is_groupoidal_cocartesian_fibration,
}

# commands answered in a homotopy 2-category; these need dim_bound >= 2
HOMOTOPY_COMMANDS = frozenset({"hcat", "equivcheck", "adjcheck", "smother", "comma", "limitcheck", "adjviacomma"})


@dataclass(frozen=True)
class Options:
    dims: int = 3
    budget: int = 1_000_000
    variant: str = "cartesian"
    left: bool = False


Command = Callable[[Workspace, Options], Verdict]
COMMANDS: Dict[str, Command] = {}


def command(name: str) -> Callable[[Command], Command]:
    def register(func: Command) -> Command:
        COMMANDS[name] = func
        return func

    return register


def dispatch(name: str, workspace: Workspace, options: Options) -> Verdict:
    try:
        func = COMMANDS[name]
    except KeyError:
        raise KeyError(f"Unknown command '{name}'") from None
    if name in HOMOTOPY_COMMANDS and options.dims < 2:
        raise InputError(f"{name} needs a dimension bound of at least 2, got {options.dims}", law="dimension bound")
    logger.info("running %s", name)
    return func(workspace, options)


# -- helpers -------------------------------------------------------------------------------------


def _space(workspace: Workspace) -> FiniteSimplicialSet:
    if workspace.spaces:
        return workspace.pick("spaces", ("space",), 1)[0]
    return nerve(workspace.first("categories"))


def _one_cells(workspace: Workspace, roles: Tuple[str, ...], options: Options) -> Tuple[Cosmos, List[Any]]:
    """Functors in the Cat instance, or simplicial maps in the quasi-category instance."""
    if workspace.functors:
        return get_cat_cosmos(), workspace.pick("functors", roles, len(roles))
    if workspace.maps:
        return get_qcat_cosmos(options.dims), workspace.pick("maps", roles, len(roles))
    raise InputError("document has no functors or maps", law="references")


def _functors(workspace: Workspace, roles: Tuple[str, ...]) -> List[Any]:
    return workspace.pick("functors", roles, len(roles))


# -- commands ------------------------------------------------------------------------------------


@command("validate")
def validate(workspace: Workspace, options: Options) -> Verdict:
    counts = {kind: len(getattr(workspace, kind)) for kind in ("categories", "spaces", "functors", "transformations", "maps")}
    return Verdict.yes("document is valid", counts, Certificate(exact=True))


@command("qcheck")
def qcheck(workspace: Workspace, options: Options) -> Verdict:
    return is_quasicategory(_space(workspace), options.dims, Budget(options.budget))


@command("kancheck")
def kancheck(workspace: Workspace, options: Options) -> Verdict:
    return is_kan(_space(workspace), options.dims, Budget(options.budget))


@command("hcat")
def hcat(workspace: Workspace, options: Options) -> Verdict:
    space = _space(workspace)
    h = homotopy_category(space)
    certificate = Certificate(dims=space.dims, exact=space.is_complete)
    if not composition_is_well_defined(h):
        return Verdict.no("composition depends on the chosen filler", None, certificate)
    return Verdict.yes(f"homotopy category with {len(h.objects)} objects and {len(h.arrows)} arrows", h, certificate)


@command("fibcheck")
def fibcheck(workspace: Workspace, options: Options) -> Verdict:
    try:
        check = VARIANTS[options.variant]
    except KeyError:
        raise KeyError(f"Unknown fibration variant '{options.variant}'") from None
    (p,) = _functors(workspace, ("p",))
    return check(p)


@command("equivcheck")
def equivcheck(workspace: Workspace, options: Options) -> Verdict:
    K, (f,) = _one_cells(workspace, ("f",), options)
    return check_equivalence_2cat(K, f, Budget(options.budget))


@command("adjcheck")
def adjcheck(workspace: Workspace, options: Options) -> Verdict:
    K, (f, u) = _one_cells(workspace, ("left", "right"), options)
    cells = workspace.transformations
    if "unit" in cells and "counit" in cells:
        return check_adjunction(AdjunctionData(K, f, u, K.nat_cell(cells["unit"]), K.nat_cell(cells["counit"])))
    adj = find_adjunction(K, f, u)
    if adj is None:
        return Verdict.no(f"no unit and counit make {label(f)} ⊣ {label(u)}", None, Certificate(dims=getattr(K, "dims", None)))
    return check_adjunction(adj)


@command("smother")
def smother(workspace: Workspace, options: Options) -> Verdict:
    (f,) = _functors(workspace, ("f",))
    return check_smothering(f)


@command("comma")
def comma_command(workspace: Workspace, options: Options) -> Verdict:
    K, (f, g) = _one_cells(workspace, ("f", "g"), options)
    result = comma(K, f, g)
    return Verdict.yes(f"comma object {label(f)}↓{label(g)}", result, Certificate(dims=getattr(K, "dims", None), exact=K.exact))


@command("limitcheck")
def limitcheck(workspace: Workspace, options: Options) -> Verdict:
    (d,) = _functors(workspace, ("diagram",))
    K = get_cat_cosmos()
    apex = workspace.parameters.get("apex")
    if apex is None:
        found = limit_oracle(d)
        if found is None:
            return Verdict.no(f"{d.label()} has no limit", None, Certificate(exact=True))
        return Verdict.yes(f"limit {label(found[0])}", {"apex": found[0], "cone": found[1]}, Certificate(exact=True))
    J, A = d.source, d.target
    x = next((y for y in A.objects if label(y) == str(apex)), None)
    if x is None:
        raise InputError(f"apex {apex!r} is not an object of {A.label()}", law="references")
    return check_limit(K, J, K.element(K.cotensor(J, A), d), K.element(A, x), Budget(options.budget))


@command("adjviacomma")
def adjviacomma(workspace: Workspace, options: Options) -> Verdict:
    K, (f, u) = _one_cells(workspace, ("left", "right"), options)
    return check_adjunction_via_comma(K, f, u, Budget(options.budget))


@command("modcheck")
def modcheck(workspace: Workspace, options: Options) -> Verdict:
    q, p = _functors(workspace, ("q", "p"))
    if q.source != p.source:
        raise InputError(f"{q.label()} and {p.label()} do not share an apex", law="span")
    return is_module(ModuleSpan(q.source, q, p))


@command("yoneda")
def yoneda(workspace: Workspace, options: Options) -> Verdict:
    f, g = _functors(workspace, ("f", "g"))
    return yoneda_bijection(f, g)


@command("ran")
def ran(workspace: Workspace, options: Options) -> Verdict:
    k, f = _functors(workspace, ("k", "f"))
    side = "left" if options.left else "right"
    try:
        extension, cell = (pointwise_lan if options.left else pointwise_ran)(k, f)
    except LimitMissing as exc:
        return Verdict.no(f"no pointwise {side} extension: {exc}", {"object": exc.obj}, Certificate(exact=True))
    if options.left:
        verdict = check_left_extension_2cat(extension, cell, f, k)
    else:
        verdict = check_right_extension_2cat(extension, cell, f, k)
    if not verdict.is_yes:
        return verdict
    return Verdict.yes(f"pointwise {side} extension", {"extension": extension, "cell": cell}, verdict.certificate)
