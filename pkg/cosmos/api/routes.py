"""HTTP API running the named checks on posted documents."""
from __future__ import annotations

from typing import Any, Dict, List, Optional

from fastapi import APIRouter, Depends, HTTPException, status
from pydantic import BaseModel, Field

from cosmos import config as settings
from cosmos.api.schemas import CosmosDocument, build_document
from cosmos.commands import COMMANDS, Options, dispatch
from cosmos.core.errors import CosmosError, InputError
from cosmos.core.models import Verdict
from cosmos.library import Library
from cosmos.runtime import get_library

router = APIRouter(prefix="/checks", tags=["checks"])
library_router = APIRouter(prefix="/library", tags=["library"])


class CheckRequest(BaseModel):
    document: CosmosDocument
    dims: Optional[int] = Field(default=None, ge=0, description="Dimension bound; defaults to the configured bound")
    budget: Optional[int] = Field(default=None, gt=0, description="Search node budget")
    variant: str = Field(default="cartesian", description="Fibration variant for fibcheck")
    left: bool = Field(default=False, description="Left instead of right extension for ran")


class VerdictResponse(BaseModel):
    status: str
    reason: str
    witness: Any = None
    certificate: Dict[str, Any]

    @classmethod
    def from_verdict(cls, verdict: Verdict) -> "VerdictResponse":
        return cls(**verdict.to_dict())


def _raise_http(exc: Exception) -> None:
    if isinstance(exc, KeyError):
        detail = exc.args[0] if exc.args else str(exc)
        raise HTTPException(status_code=status.HTTP_404_NOT_FOUND, detail=detail) from exc
    if isinstance(exc, InputError):
        detail = f"{exc} (law: {exc.law})" if exc.law else str(exc)
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=detail) from exc
    raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc)) from exc


@router.get("", response_model=List[str])
async def list_checks() -> List[str]:
    return sorted(COMMANDS)


@router.post("/{command}", response_model=VerdictResponse)
def run_check(command: str, request: CheckRequest) -> VerdictResponse:
    """Build the document and run one check on it."""
    options = Options(
        dims=request.dims if request.dims is not None else settings.config.dim_bound,
        budget=request.budget or settings.config.budget,
        variant=request.variant,
        left=request.left,
    )
    try:
        verdict = dispatch(command, build_document(request.document), options)
    except (KeyError, CosmosError) as exc:
        _raise_http(exc)
    return VerdictResponse.from_verdict(verdict)


@library_router.get("", response_model=Dict[str, List[str]])
async def list_library(library: Library = Depends(get_library)) -> Dict[str, List[str]]:
    return library.listing()


@library_router.post("/run")
def run_library(group: Optional[str] = None, library: Library = Depends(get_library)) -> dict:
    """Run the acceptance suite, or one group of it."""
    return library.run(group).to_dict()
