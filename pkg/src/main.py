"""
Tamari Engine - Main Application Entry Point

HTTP surface over the Tamari / m-Tamari interval-poset library.
"""

import json
import time
from typing import Any, Dict, List, Optional

import uvicorn
from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from loguru import logger
from pydantic import BaseModel, Field

from src.config import configure_logging, get_settings
from src.services.tamari_service import TamariService

settings = get_settings()
configure_logging(settings.log_level)

# Initialize FastAPI app
app = FastAPI(
    title="Tamari Engine",
    description="Interval-posets, Tamari polynomials and interval counts for the (m-)Tamari lattices",
    version="1.0.0",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

tamari_service = TamariService(
    max_catalan=settings.max_catalan,
    workers=settings.enumeration_workers,
    max_brute_force=settings.max_brute_force,
)


# Request Models
class ConvertRequest(BaseModel):
    value: str
    source: str = Field(..., description="dyck, tree-json, bracket, ballot or mary")
    target: str
    m: Optional[int] = Field(None, ge=1)


class CountRequest(BaseModel):
    n: int = Field(..., ge=0)
    m: int = Field(1, ge=1)
    refined: bool = False
    oracle: bool = False
    force: bool = False


class PolyRequest(BaseModel):
    tree: str = Field(..., description="Dyck word of the tree")
    m: Optional[int] = Field(None, ge=1)
    mirror: bool = False
    b: bool = False
    at_one: bool = False


class IntervalRequest(BaseModel):
    relations: List[List[int]]
    size: Optional[int] = Field(None, ge=0)
    view: str = "contents"
    force: bool = False


class ComposeRequest(BaseModel):
    left: Dict[str, Any]
    right: Optional[Dict[str, Any]] = None
    rights: List[Dict[str, Any]] = Field(default_factory=list)
    m: Optional[int] = Field(None, ge=1)


class DecomposeRequest(BaseModel):
    relations: List[List[int]]
    size: Optional[int] = Field(None, ge=0)
    m: Optional[int] = Field(None, ge=1)


class LatticeRequest(BaseModel):
    n: int = Field(..., ge=0)
    m: int = Field(1, ge=1)
    force: bool = False


def _relations_text(relations: List[List[int]]) -> str:
    return json.dumps(relations)


def _poset_text(poset: Dict[str, Any]) -> str:
    return json.dumps(poset)


def _respond(result: Dict[str, Any], started: float) -> Dict[str, Any]:
    if not result["success"]:
        raise HTTPException(status_code=400, detail={"error": result["error"], "error_type": result["error_type"]})
    result["processing_time_ms"] = int((time.time() - started) * 1000)
    return result


# Health Check
@app.get("/health")
async def health_check():
    return {
        "status": "healthy",
        "service": "Tamari Engine",
        "version": "1.0.0",
        "features": ["conversions", "interval_posets", "composition", "polynomials", "counting", "m_tamari"],
    }


@app.post("/api/v1/convert")
async def convert(request: ConvertRequest):
    started = time.time()
    try:
        result = tamari_service.convert(request.value, request.source, request.target, request.m)
        return _respond(result, started)
    except HTTPException:
        raise
    except Exception as e:
        logger.exception("convert failed")
        raise HTTPException(status_code=500, detail=f"Conversion error: {str(e)}")


@app.post("/api/v1/count")
async def count(request: CountRequest):
    """Generated count, closed formula and (optionally) the pairwise oracle."""
    started = time.time()
    try:
        result = tamari_service.count(
            request.n, request.m, refined=request.refined, oracle=request.oracle, force=request.force
        )
        return _respond(result, started)
    except HTTPException:
        raise
    except Exception as e:
        logger.exception("count failed")
        raise HTTPException(status_code=500, detail=f"Counting error: {str(e)}")


@app.post("/api/v1/poly")
async def poly(request: PolyRequest):
    started = time.time()
    try:
        result = tamari_service.poly(
            request.tree, m=request.m, mirror=request.mirror, b=request.b, at_one=request.at_one
        )
        return _respond(result, started)
    except HTTPException:
        raise
    except Exception as e:
        logger.exception("poly failed")
        raise HTTPException(status_code=500, detail=f"Polynomial error: {str(e)}")


@app.post("/api/v1/interval")
async def interval(request: IntervalRequest):
    started = time.time()
    try:
        result = tamari_service.interval(
            _relations_text(request.relations), view=request.view, size=request.size, force=request.force
        )
        return _respond(result, started)
    except HTTPException:
        raise
    except Exception as e:
        logger.exception("interval failed")
        raise HTTPException(status_code=500, detail=f"Interval error: {str(e)}")


@app.post("/api/v1/compose")
async def compose(request: ComposeRequest):
    started = time.time()
    try:
        rights = request.rights or ([request.right] if request.right is not None else [])
        result = tamari_service.compose(
            _poset_text(request.left), [_poset_text(right) for right in rights], request.m
        )
        return _respond(result, started)
    except HTTPException:
        raise
    except Exception as e:
        logger.exception("compose failed")
        raise HTTPException(status_code=500, detail=f"Composition error: {str(e)}")


@app.post("/api/v1/decompose")
async def decompose(request: DecomposeRequest):
    started = time.time()
    try:
        result = tamari_service.decompose(_relations_text(request.relations), size=request.size, m=request.m)
        return _respond(result, started)
    except HTTPException:
        raise
    except Exception as e:
        logger.exception("decompose failed")
        raise HTTPException(status_code=500, detail=f"Decomposition error: {str(e)}")


@app.post("/api/v1/lattice")
async def lattice(request: LatticeRequest):
    started = time.time()
    try:
        result = tamari_service.lattice(request.n, request.m, force=request.force)
        return _respond(result, started)
    except HTTPException:
        raise
    except Exception as e:
        logger.exception("lattice failed")
        raise HTTPException(status_code=500, detail=f"Lattice error: {str(e)}")


if __name__ == "__main__":
    print(f"🚀 Starting Tamari Engine on {settings.host}:{settings.port}")
    uvicorn.run(
        "src.main:app",
        host=settings.host,
        port=settings.port,
        log_level=settings.log_level.lower(),
    )
