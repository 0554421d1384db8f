"""
Service settings and logging setup.

The library and the CLI are configured through arguments only; the HTTP
service reads its settings from the environment (and an optional .env).
"""

import os
import sys
from functools import lru_cache

from dotenv import load_dotenv
from loguru import logger
from pydantic import BaseModel

# Load environment variables
load_dotenv()

DEFAULT_MAX_CATALAN = 100_000
# Catalan limit for the pairwise oracles and interval contents
DEFAULT_MAX_BRUTE_FORCE = 500


class Settings(BaseModel):
    host: str = "0.0.0.0"
    port: int = 8000
    log_level: str = "INFO"
    max_catalan: int = DEFAULT_MAX_CATALAN
    max_brute_force: int = DEFAULT_MAX_BRUTE_FORCE
    enumeration_workers: int = 1


@lru_cache()
def get_settings() -> Settings:
    return Settings(
        host=os.getenv("HOST", "0.0.0.0"),
        port=int(os.getenv("PORT", "8000")),
        log_level=os.getenv("LOG_LEVEL", "INFO").upper(),
        max_catalan=int(os.getenv("MAX_CATALAN", str(DEFAULT_MAX_CATALAN))),
        max_brute_force=int(os.getenv("MAX_BRUTE_FORCE", str(DEFAULT_MAX_BRUTE_FORCE))),
        enumeration_workers=int(os.getenv("ENUMERATION_WORKERS", "1")),
    )


def configure_logging(level: str = "INFO") -> None:
    """Route loguru output to a single stderr sink at the given level."""
    logger.remove()
    logger.add(
        sys.stderr,
        level=level.upper(),
        format="<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | {name}:{function} - {message}",
    )
