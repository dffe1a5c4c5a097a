"""Tests for 2-cell algebra, adjunctions, equivalences and smothering functors."""
from __future__ import annotations

import pytest

from cosmos.cat.category import NatTransform, cyclic_group, free_isomorphism, identity_functor, ordinal, terminal_category
from cosmos.cat.cosmos import CatCosmos
from cosmos.core.errors import BoundaryMismatch, InputError, InstanceMismatch
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
from cosmos.htpy2cat.cells import hcompose, hom_category, inverse, is_identity, is_invertible, vcompose, whisker
from cosmos.htpy2cat.smothering import check_smothering, check_weak_cotensor
from cosmos.library import monotone


@pytest.fixture
def K() -> CatCosmos:
    return CatCosmos()


@pytest.fixture
def galois(K: CatCosmos) -> AdjunctionData:
    f = monotone(ordinal(1), ordinal(2), {0: 0, 1: 2}, "f")
    u = monotone(ordinal(2), ordinal(1), {0: 0, 1: 0, 2: 1}, "u")
    adj = find_adjunction(K, f, u)
    assert adj is not None
    return adj


def _twist(K: CatCosmos) -> tuple:
    ident = identity_functor(cyclic_group(2))
    return ident, K.cell(ident, ident, NatTransform(ident, ident, {"*": "g"}))


def test_galois_connection_is_an_adjunction(galois: AdjunctionData) -> None:
    verdict = check_adjunction(galois)
    assert verdict.is_yes
    assert verdict.witness is galois


def test_identity_adjunction(K: CatCosmos) -> None:
    ident = identity_functor(ordinal(1))
    adj = AdjunctionData(K, ident, ident, K.identity_cell(ident), K.identity_cell(ident))
    assert check_adjunction(adj).is_yes


def test_twisted_counit_breaks_a_triangle_identity(K: CatCosmos) -> None:
    ident, twist = _twist(K)
    verdict = check_adjunction(AdjunctionData(K, ident, ident, K.identity_cell(ident), twist))
    assert verdict.is_no
    assert verdict.witness["triangle"] == "left"


def test_promotion_repairs_the_twisted_counit(K: CatCosmos) -> None:
    ident, twist = _twist(K)
    adj = promote_to_adjoint_equivalence(K, ident, ident, K.identity_cell(ident), twist)
    assert check_adjunction(adj).is_yes


def test_promotion_needs_invertible_cells(K: CatCosmos, galois: AdjunctionData) -> None:
    with pytest.raises(InputError) as info:
        promote_to_adjoint_equivalence(K, galois.f, galois.u, galois.eta, galois.epsilon)
    assert info.value.law == "invertibility"


def test_non_adjoint_pair_has_no_unit_and_counit(K: CatCosmos) -> None:
    const0 = monotone(ordinal(1), ordinal(1), {0: 0, 1: 0})
    assert find_adjunction(K, identity_functor(ordinal(1)), const0) is None


def test_adjunctions_compose(K: CatCosmos, galois: AdjunctionData) -> None:
    f2 = monotone(ordinal(2), ordinal(3), {0: 0, 1: 1, 2: 3}, "f′")
    u2 = monotone(ordinal(3), ordinal(2), {0: 0, 1: 1, 2: 1, 3: 2}, "u′")
    upper = find_adjunction(K, f2, u2)
    assert upper is not None
    composite = compose_adjunctions(galois, upper)
    assert composite.f.source == ordinal(1)
    assert composite.f.target == ordinal(3)
    assert check_adjunction(composite).is_yes


def test_composition_needs_matching_boundaries(galois: AdjunctionData) -> None:
    with pytest.raises(BoundaryMismatch):
        compose_adjunctions(galois, galois)


def test_cells_from_different_instances_do_not_compose(K: CatCosmos) -> None:
    ident = identity_functor(ordinal(1))
    other = CatCosmos()
    with pytest.raises(InstanceMismatch):
        vcompose(K.identity_cell(ident), other.identity_cell(ident))


def test_cell_algebra_units(K: CatCosmos, galois: AdjunctionData) -> None:
    eta = galois.eta
    assert vcompose(K.identity_cell(eta.target), eta) == eta
    assert is_identity(whisker(None, K.identity_cell(galois.f), None))
    assert hcompose(K.identity_cell(galois.u), K.identity_cell(galois.f)) == K.identity_cell(K.compose(galois.u, galois.f))


def test_point_of_iso_is_an_equivalence(K: CatCosmos) -> None:
    iso = free_isomorphism()
    a = K.element(iso, "a")
    verdict = check_equivalence_2cat(K, a)
    assert verdict.is_yes
    assert is_invertible(verdict.witness["unit"])
    left, right = equivalence_as_adjunctions(K, a)
    assert check_adjunction(left).is_yes
    assert check_adjunction(right).is_yes


def test_inclusion_of_an_endpoint_is_not_an_equivalence(K: CatCosmos) -> None:
    bottom = monotone(ordinal(0), ordinal(1), {0: 0})
    assert check_equivalence_2cat(K, bottom).is_no


def test_left_adjoints_are_unique_up_to_isomorphism(K: CatCosmos) -> None:
    iso = free_isomorphism()
    bang = K.to_terminal(iso)
    a, b = K.element(iso, "a"), K.element(iso, "b")
    first, second = find_adjunction(K, a, bang), find_adjunction(K, b, bang)
    assert first is not None and second is not None
    cell = compare_left_adjoints(first, second)
    assert is_invertible(cell)
    moved = transport_left_adjoint(first, cell)
    assert moved.f == b
    assert check_adjunction(moved).is_yes
    assert vcompose(inverse(cell), cell) == K.identity_cell(a)


def test_adjunctions_survive_transport(galois: AdjunctionData) -> None:
    probe = ordinal(1)
    hom = induced_adjunction_checks(galois, probe)
    assert hom.is_yes
    assert "transport: hom" in hom.certificate.notes
    assert induced_adjunction_checks(galois, probe, "cotensor").is_yes


def test_smothering_examples() -> None:
    assert check_smothering(identity_functor(ordinal(2))).is_yes
    verdict = check_smothering(monotone(ordinal(0), ordinal(1), {0: 0}))
    assert verdict.is_no
    assert verdict.witness["property"] == "surjective on objects"


@pytest.mark.parametrize("n", [1, 2])
def test_arrow_categories_are_weak_cotensors(K: CatCosmos, n: int) -> None:
    assert check_weak_cotensor(K, terminal_category(), ordinal(n)).is_yes


def test_hom_category_of_the_arrow(K: CatCosmos) -> None:
    hom = hom_category(K, ordinal(1), ordinal(1))
    assert len(hom.objects) == 3
    assert len(hom.arrows) == 6
