"""The bundled example library: every group of checks meets its expected verdicts."""
from __future__ import annotations

import pytest

from cosmos.cat.category import CatFunctor, ordinal
from cosmos.core.errors import InputError
from cosmos.core.models import Status
from cosmos.library import KINDS, Library

GROUPS = (
    "foundations",
    "quasi-categories",
    "homotopy",
    "adjunctions",
    "smothering",
    "commas",
    "limits",
    "fibrations",
    "equipment",
    "kan",
    "bridge",
)


@pytest.fixture(scope="module")
def library() -> Library:
    return Library()


@pytest.mark.parametrize("group", GROUPS)
def test_group_passes(library: Library, group: str) -> None:
    report = library.run(group)
    assert report.results
    assert report.passed, [r.to_dict() for r in report.failures]


def test_every_check_belongs_to_a_known_group(library: Library) -> None:
    assert {check.group for check in library.checks()} == set(GROUPS)


def test_library_expects_all_three_statuses(library: Library) -> None:
    expected = {check.expected for check in library.checks()}
    assert expected == {Status.YES, Status.NO, Status.UNKNOWN}


def test_listing_covers_every_kind(library: Library) -> None:
    listing = library.listing()
    assert tuple(listing) == KINDS
    assert "[1]" in listing["category"]
    assert "galois" in listing["adjunction"]


def test_unknown_items_raise_key_errors(library: Library) -> None:
    with pytest.raises(KeyError):
        library.get("adjunction", "missing")
    with pytest.raises(KeyError):
        library.register("widget", "x", None)


def test_broken_items_fail_validation() -> None:
    library = Library()
    c1 = ordinal(1)
    library.register("functor", "swap", CatFunctor(c1, c1, {0: 1, 1: 0}, {"0->1": "0->1"}))
    with pytest.raises(InputError) as info:
        library.run("foundations")
    assert info.value.law == "functor boundary"
