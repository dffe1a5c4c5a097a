"""Tests for modules, cells between them, and Kan extensions."""
from __future__ import annotations

from typing import Any, Tuple

import pytest

from cosmos.cat.category import (
    CatFunctor,
    FiniteCategory,
    NatTransform,
    boolean_lattice,
    compose_functors,
    constant_functor,
    discrete,
    identity_functor,
    ordinal,
    terminal_category,
)
from cosmos.cat.cosmos import CatCosmos
from cosmos.comma.objects import comma
from cosmos.core.errors import BoundaryMismatch, InputError, LimitMissing
from cosmos.equipment.cells import (
    Cell,
    Frame,
    check_cartesian_cell,
    check_cell,
    check_cocartesian_unit,
    check_companion_identities,
    compose_cells,
    enumerate_cells,
    identity_cell,
    restriction_cell,
    unit_cell,
    yoneda_bijection,
)
from cosmos.equipment.kan import (
    check_right_extension_2cat,
    check_right_extension_of_modules,
    pointwise_lan,
    pointwise_ran,
    right_extension_of_modules,
)
from cosmos.equipment.modules import (
    ModuleSpan,
    Profunctor,
    companion,
    from_span,
    is_module,
    restrict_module,
    to_span,
    unit_module,
)
from cosmos.library import monotone


@pytest.fixture
def K() -> CatCosmos:
    return CatCosmos()


def _galois_f() -> CatFunctor:
    return monotone(ordinal(1), ordinal(2), {0: 0, 1: 2}, "f")


def _pair() -> Tuple[FiniteCategory, FiniteCategory, CatFunctor]:
    lattice = boolean_lattice(["x", "y"])
    pair = discrete(["l", "r"])
    return pair, lattice, monotone(pair, lattice, {"l": "{x}", "r": "{y}"})


def _refuse(*args: Any) -> Any:
    raise KeyError("no elements")


def test_unit_module_sizes() -> None:
    H = unit_module(ordinal(1)).validate()
    assert H.sizes() == {(0, 0): 1, (0, 1): 0, (1, 0): 1, (1, 1): 1}


def test_companion_counts_arrows_into_the_image() -> None:
    H = companion(_galois_f()).validate()
    assert sum(H.sizes().values()) == 4
    assert len(H(1, 1)) == 1


def test_action_leaving_the_module_is_rejected() -> None:
    c1, one = ordinal(1), terminal_category()
    broken = Profunctor(c1, one, {(0, "*"): ("x",)}, lambda u, x: (1, "*", "x"), _refuse, name="broken")
    with pytest.raises(InputError) as info:
        broken.validate()
    assert info.value.law == "module action boundary"


def test_elements_of_a_profunctor_recover_the_profunctor() -> None:
    H = unit_module(ordinal(2))
    span = to_span(H)
    assert len(span.apex.objects) == 6
    assert from_span(span).sizes() == H.sizes()


def test_arrow_category_is_a_module(K: CatCosmos) -> None:
    c1 = ordinal(1)
    span = ModuleSpan.of_comma(comma(K, identity_functor(c1), identity_functor(c1)))
    verdict = is_module(span)
    assert verdict.is_yes
    assert verdict.witness.sizes() == unit_module(c1).sizes()
    assert "routes: sliced fibrations, two-sided discrete fibration" in verdict.certificate.notes


def test_collapsed_span_is_not_a_module(K: CatCosmos) -> None:
    c1 = ordinal(1)
    bang = K.to_terminal(c1)
    assert is_module(ModuleSpan(c1, bang, bang)).is_no


def test_restriction_of_the_arrow_module(K: CatCosmos) -> None:
    c1 = ordinal(1)
    span = ModuleSpan.of_comma(comma(K, identity_functor(c1), identity_functor(c1)))
    restricted = restrict_module(span, K.element(c1, 1), K.element(c1, 0))
    assert len(restricted.apex.objects) == 1


def test_restriction_cells_are_cartesian(K: CatCosmos) -> None:
    c1 = ordinal(1)
    verdict = check_cartesian_cell(restriction_cell(unit_module(c1), K.element(c1, 1), K.element(c1, 0)))
    assert verdict.is_yes
    assert verdict.certificate.bound == 2
    assert check_cartesian_cell(identity_cell(unit_module(ordinal(2)))).is_yes


def test_cell_out_of_the_empty_module_is_not_cartesian(K: CatCosmos) -> None:
    c1, one = ordinal(1), terminal_category()
    nothing = Profunctor(one, one, {}, _refuse, _refuse, name="∅")
    cell = next(enumerate_cells(Frame((nothing,), unit_module(c1), K.element(c1, 1), K.element(c1, 0))))
    assert check_cartesian_cell(cell).is_no


@pytest.mark.parametrize("category", [ordinal(1), terminal_category()])
def test_unit_cells_are_cocartesian(category: FiniteCategory) -> None:
    assert check_cocartesian_unit(unit_cell(category)).is_yes


def test_terminal_module_is_not_the_unit() -> None:
    two = discrete(["a", "b"])
    terminal = Profunctor(
        two,
        two,
        {(x, y): ("*",) for x in two.objects for y in two.objects},
        lambda u, x: (two.tgt(u), x[1], "*"),
        lambda x, v: (x[0], two.src(v), "*"),
        name="T",
    )
    ident = identity_functor(two)
    iota = next(enumerate_cells(Frame((), terminal, ident, ident, base=two)))
    assert check_cocartesian_unit(iota, modules=(terminal, unit_module(two))).is_no


def test_companion_and_conjoint_identities() -> None:
    assert check_companion_identities(_galois_f()).is_yes


def test_cells_with_values_outside_the_target_are_rejected() -> None:
    cell = identity_cell(unit_module(ordinal(1)))
    key, value = cell.assignment[0]
    wrong = (value[0], value[1], "nonsense")
    with pytest.raises(InputError) as info:
        check_cell(Cell(cell.frame, ((key, wrong),) + cell.assignment[1:]))
    assert info.value.law == "cell boundary"


def test_frames_need_composable_sources() -> None:
    c1, c2 = ordinal(1), ordinal(2)
    with pytest.raises(BoundaryMismatch):
        Frame((unit_module(c1), unit_module(c2)), unit_module(c1), identity_functor(c1), identity_functor(c2))
    with pytest.raises(InputError):
        Frame((), unit_module(c1), identity_functor(c1), identity_functor(c1))


def test_composition_needs_one_cell_per_source() -> None:
    cell = identity_cell(unit_module(ordinal(1)))
    with pytest.raises(BoundaryMismatch):
        compose_cells(cell, [cell, cell])
    assert compose_cells(cell, [cell]) == cell


@pytest.mark.parametrize(
    "first, second, count",
    [({0: 0, 1: 0}, {0: 1, 1: 1}, 1), ({0: 1, 1: 1}, {0: 0, 1: 0}, 0)],
)
def test_yoneda_bijection_counts_two_cells(first: dict, second: dict, count: int) -> None:
    c1 = ordinal(1)
    verdict = yoneda_bijection(monotone(c1, c1, first), monotone(c1, c1, second))
    assert verdict.is_yes
    assert verdict.witness["two_cells"] == count


def test_yoneda_bijection_needs_parallel_functors() -> None:
    with pytest.raises(BoundaryMismatch):
        yoneda_bijection(identity_functor(ordinal(1)), _galois_f())


def test_limit_as_a_right_extension_along_the_point(K: CatCosmos) -> None:
    pair, lattice, diagram = _pair()
    bang = K.to_terminal(pair)
    r, nu = pointwise_ran(bang, diagram)
    assert r("*") == "∅"
    assert check_right_extension_2cat(r, nu, diagram, bang).is_yes


def test_colimit_as_a_left_extension_along_the_point(K: CatCosmos) -> None:
    pair, lattice, diagram = _pair()
    l, _ = pointwise_lan(K.to_terminal(pair), diagram)
    assert l("*") == "{x,y}"


def test_missing_limit_names_the_object(K: CatCosmos) -> None:
    pair, two = discrete(["l", "r"]), discrete(["a", "b"])
    with pytest.raises(LimitMissing) as info:
        pointwise_ran(K.to_terminal(pair), monotone(pair, two, {"l": "a", "r": "b"}))
    assert info.value.obj == "*"


def test_perturbed_extension_is_rejected(K: CatCosmos) -> None:
    c1, lattice = ordinal(1), boolean_lattice(["x", "y"])
    at1, at_x = K.element(c1, 1), K.element(lattice, "{x}")
    wrong = constant_functor(c1, lattice, "∅")
    nu = NatTransform(compose_functors(wrong, at1), at_x, {"*": "∅->{x}"})
    assert check_right_extension_2cat(wrong, nu, at_x, at1).is_no


def test_right_extension_of_modules_along_the_unit() -> None:
    F = unit_module(ordinal(1))
    R, nu = right_extension_of_modules(F, F)
    assert R.sizes() == F.sizes()
    assert check_right_extension_of_modules(nu).is_yes
