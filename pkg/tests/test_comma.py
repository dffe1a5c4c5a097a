"""Tests for comma objects and the characterizations decided through them."""
from __future__ import annotations

import pytest

from cosmos.cat.category import (
    CatFunctor,
    NatTransform,
    boolean_lattice,
    cyclic_group,
    discrete,
    free_isomorphism,
    identity_functor,
    ordinal,
)
from cosmos.cat.cosmos import CatCosmos
from cosmos.cat.constructions import comma_cat_oracle
from cosmos.cat.functors import find_isomorphism
from cosmos.comma.characterizations import (
    check_absolute_right_lifting,
    check_adjunction_via_comma,
    check_colimit,
    check_limit,
    check_right_adjoint_preserves_limit,
    cone_category,
    counit_as_absolute_lifting,
    is_groupoidal,
    is_initial_element,
    is_terminal_element,
)
from cosmos.comma.equivalence import Span, fiber_counts, fibered_equivalence_search
from cosmos.comma.objects import check_smothering_comparison, comma, cone_at, hom_space, induce_1cell, induce_2cell
from cosmos.core.errors import BoundaryMismatch
from cosmos.htpy2cat.adjunctions import AdjunctionData, find_adjunction
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


def _pair(K: CatCosmos, values: dict) -> tuple:
    J, A = discrete(["l", "r"]), boolean_lattice(["x", "y"])
    d = monotone(J, A, values)
    return J, A, K.element(K.cotensor(J, A), d)


def test_arrow_category_has_three_objects(K: CatCosmos) -> None:
    c1 = ordinal(1)
    arrows = comma(K, identity_functor(c1), identity_functor(c1))
    assert len(arrows.apex.objects) == 3
    assert arrows.p0.target == c1 and arrows.p1.target == c1


def test_galois_comma_counts(K: CatCosmos, galois: AdjunctionData) -> None:
    assert len(comma(K, galois.f, identity_functor(ordinal(2))).apex.objects) == 4


def test_comma_over_the_point_is_a_product(K: CatCosmos) -> None:
    c1, c2 = ordinal(1), ordinal(2)
    result = comma(K, K.to_terminal(c1), K.to_terminal(c2))
    assert len(result.apex.objects) == 6


def test_comma_is_empty_without_two_cells(K: CatCosmos) -> None:
    c1 = ordinal(1)
    assert hom_space(K, K.element(c1, 1), K.element(c1, 0)).apex.objects == ()
    assert len(hom_space(K, K.element(c1, 0), K.element(c1, 1)).apex.objects) == 1


def test_comma_needs_a_cospan(K: CatCosmos) -> None:
    with pytest.raises(BoundaryMismatch):
        comma(K, identity_functor(ordinal(1)), identity_functor(ordinal(2)))


def test_induced_1cell_recovers_its_cone(K: CatCosmos) -> None:
    c1 = ordinal(1)
    ident = identity_functor(c1)
    arrows = comma(K, ident, ident)
    b, c = K.element(c1, 0), K.element(c1, 1)
    fb, gc = K.compose(ident, b), K.compose(ident, c)
    alpha = K.cell(fb, gc, NatTransform(fb, gc, {"*": "0->1"}))
    a = induce_1cell(arrows, alpha, b, c)
    assert K.compose(arrows.p0, a) == b
    assert K.compose(arrows.p1, a) == c
    assert cone_at(arrows, a).arrow["*"] == "0->1"


def test_terminal_and_initial_elements(K: CatCosmos) -> None:
    c1 = ordinal(1)
    assert is_terminal_element(K, K.element(c1, 1)).is_yes
    assert is_terminal_element(K, K.element(c1, 0)).is_no
    assert is_initial_element(K, K.element(c1, 0)).is_yes


def test_terminal_elements_of_groupoids(K: CatCosmos) -> None:
    assert is_terminal_element(K, K.element(free_isomorphism(), "a")).is_yes
    assert is_terminal_element(K, K.element(cyclic_group(2), "*")).is_no


def test_meet_is_the_limit_of_a_pair(K: CatCosmos) -> None:
    J, A, d = _pair(K, {"l": "{x}", "r": "{y}"})
    verdict = check_limit(K, J, d, K.element(A, "∅"))
    assert verdict.is_yes
    assert "routes: universal element of cones, fibered equivalence" in verdict.certificate.notes


def test_wrong_apex_is_not_a_limit(K: CatCosmos) -> None:
    J, A, d = _pair(K, {"l": "{x}", "r": "{y}"})
    assert check_limit(K, J, d, K.element(A, "{x}")).is_no


def test_join_is_the_colimit_of_a_pair(K: CatCosmos) -> None:
    J, A, d = _pair(K, {"l": "{x}", "r": "{y}"})
    assert check_colimit(K, J, d, K.element(A, "{x,y}")).is_yes
    assert check_colimit(K, J, d, K.element(A, "∅")).is_no


def test_adjunction_via_commas(K: CatCosmos, galois: AdjunctionData) -> None:
    verdict = check_adjunction_via_comma(K, galois.f, galois.u)
    assert verdict.is_yes
    assert verdict.witness.eta == galois.eta


def test_constant_is_not_left_adjoint_to_the_identity(K: CatCosmos) -> None:
    c1 = ordinal(1)
    const0 = monotone(c1, c1, {0: 0, 1: 0})
    verdict = check_adjunction_via_comma(K, const0, identity_functor(c1))
    assert verdict.is_no
    assert "obstruction: fiber counts" in verdict.certificate.notes


def test_commas_of_an_adjunction_are_fibered_equivalent(K: CatCosmos, galois: AdjunctionData) -> None:
    left = Span.of_comma(comma(K, galois.f, identity_functor(ordinal(2))))
    right = Span.of_comma(comma(K, identity_functor(ordinal(1)), galois.u))
    assert fiber_counts(left) == fiber_counts(right)
    assert fibered_equivalence_search(left, right).is_yes
    assert fibered_equivalence_search(left, left).is_yes


def test_counit_is_an_absolute_right_lifting(galois: AdjunctionData) -> None:
    verdict = check_absolute_right_lifting(counit_as_absolute_lifting(galois))
    assert verdict.is_yes


def test_right_adjoints_preserve_limits(K: CatCosmos, galois: AdjunctionData) -> None:
    J, A = discrete(["l", "r"]), ordinal(2)
    d = K.element(K.cotensor(J, A), monotone(J, A, {"l": 1, "r": 2}))
    assert check_right_adjoint_preserves_limit(galois, J, d, K.element(A, 1)).is_yes


def test_groupoidal_objects(K: CatCosmos) -> None:
    assert is_groupoidal(K, cyclic_group(2)).is_yes
    verdict = is_groupoidal(K, ordinal(1))
    assert verdict.is_no
    assert verdict.witness["probe"] == "1"


def test_direct_comma_matches_the_pullback_construction(K: CatCosmos, galois: AdjunctionData) -> None:
    direct, _, _, _ = comma_cat_oracle(galois.f, identity_functor(ordinal(2)))
    assert len(direct.objects) == 4
    assert find_isomorphism(direct, comma(K, galois.f, identity_functor(ordinal(2))).apex) is not None


def test_cones_over_a_pair(K: CatCosmos) -> None:
    J, A, d = _pair(K, {"l": "{x}", "r": "{y}"})
    assert len(cone_category(K, J, A, d).apex.objects) == 1


def _arrow_at(K: CatCosmos, arrows: object, b: CatFunctor, c: CatFunctor, arrow: str) -> CatFunctor:
    fb, gc = K.compose(arrows.f, b), K.compose(arrows.g, c)
    return induce_1cell(arrows, K.cell(fb, gc, NatTransform(fb, gc, {"*": arrow})), b, c)


def test_induced_2cell_between_arrows(K: CatCosmos) -> None:
    c1 = ordinal(1)
    arrows = comma(K, identity_functor(c1), identity_functor(c1))
    b0, b1 = K.element(c1, 0), K.element(c1, 1)
    a = _arrow_at(K, arrows, b0, b0, "id_0")
    a2 = _arrow_at(K, arrows, b0, b1, "0->1")
    tau0 = K.identity_cell(K.compose(arrows.p0, a))
    source, target = K.compose(arrows.p1, a), K.compose(arrows.p1, a2)
    tau1 = K.cell(source, target, NatTransform(source, target, {"*": "0->1"}))
    tau = induce_2cell(arrows, a, a2, tau0, tau1)
    assert (tau.source, tau.target) == (a, a2)


def test_comma_comparison_is_smothering(K: CatCosmos) -> None:
    c1 = ordinal(1)
    arrows = comma(K, identity_functor(c1), identity_functor(c1))
    assert check_smothering_comparison(K.terminal(), arrows).is_yes
