"""Quasi-categories: horn conditions, homotopy categories, equivalences and the qCat cosmos."""
from cosmos.qcat.cosmos import QCatCosmos, fibered_fun
from cosmos.qcat.equivalence import is_equivalence_qcat
from cosmos.qcat.fibrations import (
    is_groupoidal_object,
    is_isofibration,
    is_kan,
    is_quasicategory,
    is_trivial_fibration,
)
from cosmos.qcat.homotopy import HomotopyCategory, homotopy_category, homotopy_functor
from cosmos.qcat.interval import Interval, interval

__all__ = [
    "HomotopyCategory",
    "Interval",
    "QCatCosmos",
    "fibered_fun",
    "homotopy_category",
    "homotopy_functor",
    "interval",
    "is_equivalence_qcat",
    "is_groupoidal_object",
    "is_isofibration",
    "is_kan",
    "is_quasicategory",
    "is_trivial_fibration",
]
