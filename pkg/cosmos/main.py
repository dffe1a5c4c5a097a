"""FastAPI entry-point exposing the cosmos checks."""
from __future__ import annotations

from fastapi import FastAPI

from cosmos.api.routes import library_router
from cosmos.api.routes import router as checks_router

app = FastAPI(title="Infinity Cosmos Toolkit")
app.include_router(checks_router)
app.include_router(library_router)


@app.get("/health")
async def health() -> dict:
    return {"status": "ok"}
