"""Runtime composition helpers: shared cosmos instances and the example library."""
from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING, Optional

from cosmos import config as settings
from cosmos.cat.cosmos import CatCosmos
from cosmos.qcat.cosmos import QCatCosmos

if TYPE_CHECKING:
    from cosmos.library import Library


@lru_cache
def get_cat_cosmos() -> CatCosmos:
    return CatCosmos()


@lru_cache
def _qcat_cosmos(dims: int) -> QCatCosmos:
    return QCatCosmos(dims)


def get_qcat_cosmos(dims: Optional[int] = None) -> QCatCosmos:
    """The shared quasi-category instance truncated at ``dims``, defaulting to the configured bound."""
    return _qcat_cosmos(dims if dims is not None else settings.config.dim_bound)


@lru_cache
def get_library() -> "Library":
    from cosmos.library import Library

    return Library()
