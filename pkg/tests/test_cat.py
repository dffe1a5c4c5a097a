"""Tests for finite categories, functor enumeration, limits, fibrations and the Cat cosmos."""
from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cosmos.cat.bridge import nerve_bridge_checks, nerve_functor
from cosmos.cat.category import (
    CatFunctor,
    FiniteCategory,
    NatTransform,
    boolean_lattice,
    constant_functor,
    cyclic_group,
    discrete,
    empty_category,
    free_isomorphism,
    from_table,
    identity_functor,
    ordinal,
)
from cosmos.cat.constructions import arrow_category, grothendieck_construction, product_category, pullback_category
from cosmos.cat.cosmos import CatCosmos
from cosmos.cat.fibrations import (
    is_cartesian_2cell,
    is_cartesian_arrow,
    is_cartesian_fibration,
    is_cocartesian_fibration,
    is_groupoidal_cartesian_fibration,
)
from cosmos.cat.functors import (
    find_isomorphism,
    functor_category,
    is_equivalence,
    iter_functors,
    left_adjoint,
    right_adjoint,
)
from cosmos.cat.limits import colimit_oracle, limit_oracle
from cosmos.core.errors import InputError
from cosmos.library import monotone
from cosmos.qcat.cosmos import QCatCosmos
from cosmos.sset.simplicial import FormalSimplex


@pytest.fixture
def K() -> CatCosmos:
    return CatCosmos()


@given(st.integers(min_value=0, max_value=4))
def test_ordinal_has_one_arrow_per_pair(n: int) -> None:
    category = ordinal(n).validate()
    assert len(category.objects) == n + 1
    assert len(category.arrows) == (n + 1) * (n + 2) // 2


@given(st.integers(min_value=2, max_value=5))
def test_cyclic_group_composes_by_addition(n: int) -> None:
    group = cyclic_group(n).validate()
    assert group.is_groupoid()
    assert len(group.arrows) == n
    assert group.compose("g", group.inverse("g")) == "e"


def test_composition_in_a_poset() -> None:
    c2 = ordinal(2)
    assert c2.compose("1->2", "0->1") == "0->2"
    assert c2.compose("id_1", "0->1") == "0->1"
    assert not c2.is_iso("0->1")


def test_free_isomorphism_is_a_groupoid() -> None:
    iso = free_isomorphism().validate()
    assert iso.is_groupoid()
    assert iso.inverse("f") == "g"
    assert iso.isomorphic("a", "b")
    assert not ordinal(1).is_groupoid()


def test_opposite_reverses_arrows() -> None:
    op = ordinal(1).opposite()
    assert op.hom(1, 0) == ("0->1",)
    assert op.hom(0, 1) == ()


def test_boolean_lattice_names_subsets() -> None:
    lattice = boolean_lattice(["x", "y"])
    assert lattice.objects == ("∅", "{x}", "{y}", "{x,y}")
    assert lattice.hom("{x}", "{y}") == ()
    assert lattice.hom("∅", "{x,y}") == ("∅->{x,y}",)


def test_table_with_a_bad_composite_is_rejected() -> None:
    category = from_table(
        ["x", "y"],
        [("f", "x", "y"), ("g", "y", "x")],
        [("g", "f", "f")],
        {"x": "id_x", "y": "id_y"},
    )
    with pytest.raises(InputError) as info:
        category.validate()
    assert info.value.law == "composite boundary"


def test_duplicate_arrow_names_are_rejected() -> None:
    with pytest.raises(InputError) as info:
        from_table(["x"], [("f", "x", "x"), ("f", "x", "x")], [], {"x": "id_x"})
    assert info.value.law == "unique identifiers"


def test_functor_validation_catches_a_broken_arrow_map() -> None:
    c1 = ordinal(1)
    broken = CatFunctor(c1, c1, {0: 1, 1: 0}, {"0->1": "0->1"})
    with pytest.raises(InputError) as info:
        broken.validate()
    assert info.value.law == "functor boundary"


def test_functors_between_ordinals_are_monotone_maps() -> None:
    assert len(list(iter_functors(ordinal(1), ordinal(1)))) == 3
    assert len(list(iter_functors(ordinal(1), ordinal(2)))) == 6
    assert len(list(iter_functors(empty_category(), ordinal(2)))) == 1


def test_functor_categories() -> None:
    arrows = functor_category(ordinal(1), ordinal(1))
    assert len(arrows.objects) == 3
    assert len(arrows.arrows) == 6
    square = functor_category(discrete(["l", "r"]), ordinal(1))
    assert len(square.objects) == 4
    assert len(square.arrows) == 9


def test_equivalences_of_categories(K: CatCosmos) -> None:
    verdict = is_equivalence(K.to_terminal(free_isomorphism()))
    assert verdict.is_yes
    inverse, eta, epsilon = verdict.witness
    assert eta.is_invertible() and epsilon.is_invertible()
    assert len(inverse.source.objects) == 1
    assert is_equivalence(monotone(ordinal(0), ordinal(1), {0: 0})).is_no


def test_adjoints_from_universal_arrows() -> None:
    f = monotone(ordinal(1), ordinal(2), {0: 0, 1: 2}, "f")
    u = monotone(ordinal(2), ordinal(1), {0: 0, 1: 0, 2: 1}, "u")
    found = right_adjoint(f)
    assert found is not None
    assert found[0].on_objects == u.on_objects
    back = left_adjoint(u)
    assert back is not None
    assert back[0].on_objects == f.on_objects


def test_map_to_the_point_has_the_top_as_right_adjoint(K: CatCosmos) -> None:
    found = right_adjoint(K.to_terminal(ordinal(2)))
    assert found is not None
    assert found[0]("*") == 2


def test_isomorphism_search() -> None:
    assert find_isomorphism(ordinal(1), discrete(["a", "b"])) is None
    lattice = boolean_lattice(["x"])
    assert find_isomorphism(ordinal(1), lattice) is not None


def test_limit_oracle() -> None:
    lattice = boolean_lattice(["x", "y"])
    pair = monotone(discrete(["l", "r"]), lattice, {"l": "{x}", "r": "{y}"})
    apex, cone = limit_oracle(pair)
    assert apex == "∅"
    assert cone["l"] == "∅->{x}"
    assert colimit_oracle(pair)[0] == "{x,y}"


def test_limits_that_do_not_exist() -> None:
    two = discrete(["a", "b"])
    pair = monotone(discrete(["l", "r"]), two, {"l": "a", "r": "b"})
    assert limit_oracle(pair) is None


def test_empty_limit_is_the_terminal_object() -> None:
    nothing = CatFunctor(empty_category(), ordinal(1), {}, {})
    assert limit_oracle(nothing)[0] == 1
    assert colimit_oracle(nothing)[0] == 0


def test_product_and_pullback_categories(K: CatCosmos) -> None:
    c1 = ordinal(1)
    square, legs = product_category(c1, c1)
    assert len(square.objects) == 4
    assert len(square.arrows) == 9
    assert legs[0]((0, 1)) == 0
    apex, _ = pullback_category(K.element(c1, 0), K.element(c1, 1))
    assert apex.objects == ()


def test_arrow_category_of_an_arrow_is_the_ordinal_two() -> None:
    square, ev0, ev1 = arrow_category(ordinal(1))
    assert len(square.objects) == 3
    assert find_isomorphism(square, ordinal(2)) is not None
    assert ev0("0->1") == 0 and ev1("0->1") == 1


def test_grothendieck_construction() -> None:
    c0, c1 = ordinal(0), ordinal(1)
    total, projection = grothendieck_construction(c1, {0: c1, 1: c0}, {"0->1": monotone(c0, c1, {0: 1})})
    total.validate()
    assert len(total.objects) == 3
    assert is_cartesian_fibration(projection).is_yes


def test_grothendieck_construction_needs_every_reindexing() -> None:
    c0, c1 = ordinal(0), ordinal(1)
    with pytest.raises(InputError) as info:
        grothendieck_construction(c1, {0: c1, 1: c0}, {})
    assert info.value.law == "reindexing"


def test_domain_projection_is_a_cartesian_fibration(K: CatCosmos) -> None:
    verdict = is_cartesian_fibration(K.arrow_object(ordinal(1)).ev0)
    assert verdict.is_yes
    assert "routes: cartesian lifts, fibered adjoint, right adjoint right inverse, classical" in verdict.certificate.notes


def test_inclusion_of_the_top_is_cocartesian_but_not_cartesian() -> None:
    top = monotone(ordinal(0), ordinal(1), {0: 1})
    assert is_cartesian_fibration(top).is_no
    assert is_cocartesian_fibration(top).is_yes


def test_groupoidal_fibrations(K: CatCosmos) -> None:
    assert is_groupoidal_cartesian_fibration(K.to_terminal(free_isomorphism())).is_yes
    assert is_groupoidal_cartesian_fibration(K.to_terminal(ordinal(1))).is_no


def test_every_arrow_is_cartesian_for_the_identity() -> None:
    ident = identity_functor(ordinal(2))
    assert all(is_cartesian_arrow(ident, a) for a in ordinal(2).arrows)


def test_isofibrations_in_cat(K: CatCosmos) -> None:
    assert K.is_isofibration(monotone(ordinal(0), ordinal(1), {0: 0})).is_yes
    assert K.is_isofibration(K.element(free_isomorphism(), "a")).is_no


def test_elements_must_exist(K: CatCosmos) -> None:
    with pytest.raises(InputError):
        K.element(ordinal(1), 5)
    assert [e("*") for e in K.elements(ordinal(2))] == [0, 1, 2]


def test_arrow_object_encodes_two_cells(K: CatCosmos) -> None:
    c1 = ordinal(1)
    const0 = constant_functor(c1, c1, 0)
    alpha = K.cell(const0, identity_functor(c1), NatTransform(const0, identity_functor(c1), {0: "id_0", 1: "0->1"}))
    encoded = K.cell_as_cotensor(alpha)
    assert encoded.target == K.arrow_object(c1).apex
    assert K.cotensor_cell(encoded) == alpha


def test_nerve_functor_sends_arrows_to_edges() -> None:
    f = monotone(ordinal(1), ordinal(2), {0: 0, 1: 2}, "f")
    image = nerve_functor(f, QCatCosmos(dims=2))
    assert image.on("0->1") == FormalSimplex.of("0->2", 1)
    assert image.on("1") == FormalSimplex.of("2", 0)


def test_cartesian_2cells_between_elements(K: CatCosmos) -> None:
    c1 = ordinal(1)
    e1, e = K.element(c1, 0), K.element(c1, 1)
    chi = NatTransform(e1, e, {"*": "0->1"})
    assert is_cartesian_2cell(identity_functor(c1), chi).is_yes
    verdict = is_cartesian_2cell(K.to_terminal(c1), chi)
    assert verdict.is_no
    assert verdict.witness["clause"] == "induction"


def test_nerve_keeps_terminal_objects() -> None:
    verdict = nerve_bridge_checks("terminal", ordinal(1), 1, cosmos=QCatCosmos(dims=2))
    assert verdict.is_yes
    assert "nerve bridge: terminal" in verdict.certificate.notes
    with pytest.raises(KeyError):
        nerve_bridge_checks("monad", identity_functor(ordinal(1)))


def _one_object_monoid(square: str) -> FiniteCategory:
    return from_table(["x"], [("a", "x", "x")], [("a", "a", square)], {"x": "id_x"})


def test_equality_compares_composition() -> None:
    idempotent, involution = _one_object_monoid("a"), _one_object_monoid("id_x")
    assert idempotent == _one_object_monoid("a")
    assert hash(idempotent) == hash(involution)
    assert idempotent != involution


def test_arrows_after_an_arrow_come_from_its_target() -> None:
    c2 = ordinal(2)
    assert set(c2._after("0->1")) == {"id_1", "1->2"}
    assert set(c2._after("1->2")) == {"id_2"}


def test_products_of_the_same_factors_are_shared() -> None:
    A = boolean_lattice(["x", "y"])
    first, _ = product_category(A, A)
    second, _ = product_category(A, A)
    assert first is second
    assert CatCosmos().product(A, A).apex is first
