"""Tests for horn conditions, homotopy categories and the quasi-category cosmos."""
from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cosmos.cat.category import cyclic_group, free_isomorphism, ordinal
from cosmos.cat.functors import find_isomorphism
from cosmos.core.errors import BoundaryMismatch, InputError
from cosmos.core.models import Budget
from cosmos.qcat.cosmos import QCatCosmos, fibered_fun
from cosmos.qcat.equivalence import is_equivalence_qcat
from cosmos.qcat.fibrations import (
    is_groupoidal_object,
    is_isofibration,
    is_kan,
    is_quasicategory,
    is_trivial_fibration,
    lifts_random_boundaries,
    random_boundary_problems,
)
from cosmos.qcat.homotopy import composition_is_well_defined, homotopy_category
from cosmos.qcat.interval import interval
from cosmos.sset.constructions import boundary, horn, nerve, point_map, standard_simplex, to_terminal
from cosmos.sset.search import LiftingProblem, iter_maps
from cosmos.sset.simplicial import identity_map

ISO = nerve(free_isomorphism(), 3)
BOUNDARIES = {n: boundary(n) for n in (1, 2)}
BOUNDARY_MAPS = {n: list(iter_maps(space, ISO)) for n, (space, _) in BOUNDARIES.items()}


def test_nerve_is_a_quasicategory_with_unique_fillers() -> None:
    verdict = is_quasicategory(nerve(ordinal(2)), 4)
    assert verdict.is_yes
    assert verdict.reason == "quasi-category up to dim 4"
    assert "inner fillers unique" in verdict.certificate.notes
    assert verdict.certificate.exact


def test_horn_is_not_a_quasicategory() -> None:
    space, _ = horn(2, 1)
    verdict = is_quasicategory(space)
    assert verdict.is_no
    assert verdict.witness["horn"] == "Λ^{2,1}"
    assert (verdict.witness["n"], verdict.witness["k"]) == (2, 1)


def test_edge_is_a_quasicategory() -> None:
    assert is_quasicategory(standard_simplex(1)).is_yes


def test_truncated_nerve_is_checked_only_to_its_storage() -> None:
    verdict = is_quasicategory(nerve(cyclic_group(2), 2), 5)
    assert verdict.is_yes
    assert verdict.certificate.dims == 2


def test_one_object_groupoid_is_kan() -> None:
    assert is_kan(nerve(cyclic_group(2), 3), 3).is_yes


def test_edge_is_not_kan() -> None:
    verdict = is_kan(standard_simplex(1))
    assert verdict.is_no
    assert verdict.witness["horn"] == "Λ^{2,0}"


def test_point_is_kan() -> None:
    assert is_kan(standard_simplex(0)).is_yes


def test_tiny_budget_gives_unknown() -> None:
    verdict = is_quasicategory(nerve(ordinal(3)), budget=Budget(3))
    assert verdict.is_unknown
    assert not verdict.certificate.exact


def test_homotopy_category_of_a_simplex_is_the_ordinal() -> None:
    h = homotopy_category(standard_simplex(2))
    assert len(h.objects) == 3
    assert len(h.arrows) == 6
    assert find_isomorphism(ordinal(2), h) is not None
    assert composition_is_well_defined(h)


def test_homotopy_category_of_a_horn_needs_a_composite() -> None:
    with pytest.raises(InputError) as info:
        homotopy_category(horn(2, 1)[0])
    assert info.value.law == "inner horn"


def test_groupoidal_objects() -> None:
    assert is_groupoidal_object(nerve(cyclic_group(2), 3)).is_yes
    assert is_groupoidal_object(standard_simplex(1)).is_no
    assert is_groupoidal_object(standard_simplex(0)).is_yes


def test_maps_to_the_point_are_isofibrations() -> None:
    assert is_isofibration(to_terminal(nerve(ordinal(1)))).is_yes


def test_trivial_fibrations() -> None:
    delta = standard_simplex(1)
    assert is_trivial_fibration(identity_map(delta)).is_yes
    verdict = is_trivial_fibration(point_map(delta, "0"))
    assert verdict.is_no
    assert "∂Δ^0" in verdict.reason


def test_contractible_groupoid_is_a_trivial_fibration_over_the_point() -> None:
    assert is_trivial_fibration(to_terminal(ISO)).is_yes


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=0, max_value=2**16))
def test_trivial_fibration_verdicts_survive_random_boundaries(seed: int) -> None:
    p = to_terminal(ISO)
    problems = random_boundary_problems(p, 20, dims=2, seed=seed)
    assert len(problems) == 20
    assert all(problem.right == p for problem in problems)
    assert lifts_random_boundaries(p, problems)
    assert lifts_random_boundaries(p, dims=2, seed=seed)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([1, 2]).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, len(BOUNDARY_MAPS[n]) - 1))))
def test_contractible_groupoid_lifts_sampled_boundaries(case: tuple) -> None:
    n, index = case
    _, inclusion = BOUNDARIES[n]
    p = to_terminal(ISO)
    problem = LiftingProblem(inclusion, p, BOUNDARY_MAPS[n][index], to_terminal(inclusion.target))
    assert lifts_random_boundaries(p, [problem])


def test_random_boundaries_catch_disconnected_fibers() -> None:
    two_points, _ = BOUNDARIES[1]
    p = to_terminal(two_points)
    assert is_trivial_fibration(p, 1).is_no
    assert not lifts_random_boundaries(p, count=200, dims=1, seed=7)


def test_boundary_problems_must_be_posed_against_the_map() -> None:
    _, inclusion = BOUNDARIES[1]
    p = to_terminal(ISO)
    problem = LiftingProblem(inclusion, p, BOUNDARY_MAPS[1][0], to_terminal(inclusion.target))
    with pytest.raises(BoundaryMismatch):
        lifts_random_boundaries(to_terminal(nerve(free_isomorphism(), 2)), [problem])


def test_identity_is_an_equivalence() -> None:
    delta = standard_simplex(1)
    verdict = is_equivalence_qcat(identity_map(delta))
    assert verdict.is_yes
    assert verdict.witness["inverse"] == identity_map(delta)


def test_endpoint_of_the_interval_is_an_equivalence() -> None:
    shape = interval(2)
    assert is_equivalence_qcat(shape.start, dims=2).is_yes


def test_endpoint_of_an_edge_is_not_an_equivalence() -> None:
    verdict = is_equivalence_qcat(point_map(standard_simplex(1), "0"))
    assert verdict.is_no
    assert "homotopy category obstruction" in verdict.certificate.notes


def test_cosmos_needs_two_dimensions() -> None:
    with pytest.raises(InputError):
        QCatCosmos(dims=1)


def test_hom_category_from_a_point_is_the_space_itself() -> None:
    K = QCatCosmos(dims=2)
    hom = K.hom(standard_simplex(0), standard_simplex(1))
    assert len(hom.objects) == 2
    assert len(hom.arrows) == 3
    assert K.element(standard_simplex(1), "1") == point_map(standard_simplex(1), "1")


def test_fibered_function_complex_over_the_point() -> None:
    over_point = fibered_fun(to_terminal(standard_simplex(0)), to_terminal(standard_simplex(1)), QCatCosmos(dims=2))
    assert len(over_point.nondegenerate(0)) == 2


def test_fibered_function_complex_needs_a_common_base() -> None:
    with pytest.raises(InputError):
        fibered_fun(to_terminal(standard_simplex(0)), identity_map(standard_simplex(1)))


def test_interval_is_named_without_touching_other_nerves() -> None:
    assert interval(2).space.label() == "𝕀"
    assert nerve(free_isomorphism(), 2).label() == "N(Iso)"
