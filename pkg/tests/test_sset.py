"""Tests for finite simplicial sets, their limits, function complexes and lifting search."""
from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cosmos.cat.category import free_isomorphism, ordinal
from cosmos.core.errors import InputError, NonCommutingSquare, TruncationError
from cosmos.core.models import Budget
from cosmos.sset.constructions import (
    boundary,
    chain_simplex,
    horn,
    nerve,
    product,
    pullback,
    standard_simplex,
    to_terminal,
    truncate,
)
from cosmos.sset.exponential import exponential, transpose, untranspose
from cosmos.sset.search import LiftingProblem, constraints_from, find_isomorphism, iter_maps, solve_lifting
from cosmos.sset.simplicial import FiniteSimplicialSet, FormalSimplex, SimplicialMap, compose, identity_map


def _vertex(sid: str) -> FormalSimplex:
    return FormalSimplex.of(sid, 0)


def _edge(sid: str) -> FormalSimplex:
    return FormalSimplex.of(sid, 1)


@given(st.integers(min_value=0, max_value=5))
def test_standard_simplex_counts_are_binomial(n: int) -> None:
    space = standard_simplex(n)
    assert space.counts() == tuple(comb(n + 1, k + 1) for k in range(n + 1))
    assert space.is_complete


@given(st.integers(min_value=2, max_value=5).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
@settings(max_examples=20)
def test_horn_drops_the_top_simplex_and_one_face(case: tuple) -> None:
    n, k = case
    space, inclusion = horn(n, k)
    full = standard_simplex(n).counts()
    expected = list(full[:-1])
    expected[n - 1] -= 1
    while expected and expected[-1] == 0:
        expected.pop()
    assert space.counts() == tuple(expected)
    assert inclusion.validate().target == standard_simplex(n)


def test_horn_21_has_the_two_outer_edges() -> None:
    space, _ = horn(2, 1)
    assert space.nondegenerate(1) == ("01", "12")
    assert space.counts() == (3, 2)


def test_horn_31_counts() -> None:
    space, _ = horn(3, 1)
    assert space.counts() == (4, 6, 3)


def test_boundary_of_an_edge_is_two_points() -> None:
    space, inclusion = boundary(1)
    assert space.counts() == (2,)
    assert inclusion.validate().source is space


def test_horn_rejects_out_of_range_index() -> None:
    with pytest.raises(InputError):
        horn(2, 3)


def test_nerve_of_ordinal_matches_simplex() -> None:
    N = nerve(ordinal(2))
    assert N.counts() == (3, 3, 1)
    assert N.face("0->1", 0) == _vertex("1")
    assert find_isomorphism(N, standard_simplex(2)) is not None


def test_nerve_of_free_isomorphism_truncates_with_two_simplices_per_level() -> None:
    N = nerve(free_isomorphism(), 3)
    assert N.truncated
    assert N.counts() == (2, 2, 2, 2)
    assert N.coskeletal == 2
    N.validate()


def test_nondegenerate_above_truncation_raises() -> None:
    N = nerve(free_isomorphism(), 2)
    with pytest.raises(TruncationError):
        N.nondegenerate(3)


def test_truncate_forgets_higher_simplices() -> None:
    space = truncate(standard_simplex(3), 1)
    assert space.counts() == (4, 6)
    assert space.truncated


def test_validate_reports_the_violated_law() -> None:
    faces = {"e": (_vertex("x"), _vertex("missing"))}
    space = FiniteSimplicialSet([["x", "y"], ["e"]], faces)
    with pytest.raises(InputError) as info:
        space.validate()
    assert info.value.law == "stored faces"


def test_validate_reports_wrong_face_count() -> None:
    space = FiniteSimplicialSet([["x"], ["e"]], {"e": (_vertex("x"),)})
    with pytest.raises(InputError) as info:
        space.validate()
    assert info.value.law == "face count"


def test_product_of_two_edges_is_a_square() -> None:
    square = product(standard_simplex(1), standard_simplex(1))
    assert square.counts() == (4, 5, 2)
    square.validate()
    for leg in square.legs:
        leg.validate()


def test_pullback_over_a_point_is_the_product() -> None:
    a, b = standard_simplex(1), standard_simplex(1)
    limit = pullback(to_terminal(a), to_terminal(b))
    assert limit.counts() == product(a, b).counts()


def test_pair_commutes_with_the_legs() -> None:
    delta = standard_simplex(1)
    square = product(delta, delta)
    diagonal = square.pair(identity_map(delta), identity_map(delta))
    diagonal.validate()
    assert compose(square.legs[0], diagonal) == identity_map(delta)


def test_exponential_of_edges_has_three_vertices() -> None:
    fun = exponential(standard_simplex(1), standard_simplex(1), 1)
    assert fun.count(0) == 3
    fun.validate()


def test_exponential_into_a_nerve_counts_monotone_pairs() -> None:
    fun = exponential(standard_simplex(1), nerve(ordinal(2)), 0)
    assert fun.count(0) == 6


def test_transpose_and_untranspose_agree_on_a_projection() -> None:
    delta = standard_simplex(1)
    fun = exponential(delta, delta, 1)
    source = product(delta, delta)
    projection = source.legs[1]
    g = transpose(projection, fun)
    g.validate()
    back = untranspose(g, fun)
    assert back.validate() is back
    assert back == projection
    assert set(back.assignment) == set(source.ids())


@pytest.mark.parametrize("k", [0, 1, 2])
def test_every_map_out_of_a_cylinder_survives_transposition(k: int) -> None:
    delta = standard_simplex(1)
    fun = exponential(delta, delta, max(k, 1))
    maps = list(iter_maps(product(standard_simplex(k), delta), delta))
    assert maps
    for f in maps:
        assert untranspose(transpose(f, fun), fun) == f


def _horn_into_nerve() -> tuple:
    N = nerve(ordinal(2))
    shape, inclusion = horn(2, 1)
    top = SimplicialMap(
        shape,
        N,
        {
            "0": _vertex("0"),
            "1": _vertex("1"),
            "2": _vertex("2"),
            "01": _edge("0->1"),
            "12": _edge("1->2"),
        },
    ).validate()
    return N, inclusion, top


def test_inner_horn_in_a_nerve_has_the_composite_as_unique_filler() -> None:
    N, inclusion, top = _horn_into_nerve()
    problem = LiftingProblem(inclusion, to_terminal(N), top, to_terminal(standard_simplex(2)))
    verdict = solve_lifting(problem)
    assert verdict.is_yes
    assert verdict.witness.on("012") == FormalSimplex.of("0->1;1->2", 2)
    assert verdict.witness.on("02") == _edge("0->2")
    fillers = list(iter_maps(standard_simplex(2), N, constraints=constraints_from(inclusion, top)))
    assert len(fillers) == 1


def test_outer_horn_in_an_interval_has_no_filler() -> None:
    N = nerve(ordinal(1))
    shape, inclusion = horn(2, 0)
    top = SimplicialMap(
        shape,
        N,
        {
            "0": _vertex("0"),
            "1": _vertex("1"),
            "2": _vertex("0"),
            "01": _edge("0->1"),
            "02": FormalSimplex("0", (0, 0)),
        },
    ).validate()
    problem = LiftingProblem(inclusion, to_terminal(N), top, to_terminal(standard_simplex(2)))
    verdict = solve_lifting(problem)
    assert verdict.is_no
    assert verdict.certificate.exact


def test_identity_left_map_lifts_to_top() -> None:
    delta = standard_simplex(1)
    top = identity_map(delta)
    problem = LiftingProblem(identity_map(delta), to_terminal(delta), top, to_terminal(delta))
    verdict = solve_lifting(problem)
    assert verdict.is_yes
    assert verdict.witness == top


def test_non_commuting_square_is_rejected() -> None:
    delta = standard_simplex(1)
    start = SimplicialMap(standard_simplex(0), delta, {"0": _vertex("0")})
    end = SimplicialMap(standard_simplex(0), delta, {"0": _vertex("1")})
    with pytest.raises(NonCommutingSquare):
        LiftingProblem(start, identity_map(delta), end, identity_map(delta))


def test_search_reports_unknown_when_budget_runs_out() -> None:
    N, inclusion, top = _horn_into_nerve()
    problem = LiftingProblem(inclusion, to_terminal(N), top, to_terminal(standard_simplex(2)))
    verdict = solve_lifting(problem, Budget(0))
    assert verdict.is_unknown
    assert not verdict.certificate.exact


def test_maps_are_enumerated_in_a_stable_order() -> None:
    delta = standard_simplex(1)
    first = [m.key() for m in iter_maps(delta, delta)]
    second = [m.key() for m in iter_maps(delta, delta)]
    assert first == second
    assert len(first) == 3


def test_nerve_faces_are_spelled_by_chains() -> None:
    c2 = ordinal(2)
    assert nerve(c2).faces("0->1;1->2") == (
        chain_simplex(c2, ("1->2",)),
        chain_simplex(c2, ("0->2",)),
        chain_simplex(c2, ("0->1",)),
    )
    assert nerve(free_isomorphism(), 2).faces("f;g")[1] == FormalSimplex("a", (0, 0))


def test_product_simplices_factor_out_common_degeneracies() -> None:
    delta = standard_simplex(1)
    square = product(delta, delta)
    square.validate()
    degenerate = FormalSimplex("01", (0, 0, 1))
    assert square.normalize([degenerate, degenerate]) == FormalSimplex("(01, 01)", (0, 0, 1))
    assert square.normalize([degenerate, FormalSimplex("01", (0, 1, 1))]).base in square.nondegenerate(2)
