"""
Environment-driven settings
"""

import os
import logging
from functools import lru_cache
from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from butson.shared.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class Settings(BaseModel):
    """Runtime settings read from the environment"""
    log_level: str = Field("INFO", description="Logging level name")
    workers: int = Field(1, ge=1, le=256, description="Default search worker count")
    checkpoint_every: int = Field(500, ge=1, description="Rows per search chunk between checkpoints")
    eig_residual_tol: float = Field(1e-9, gt=0, description="Relative eigenpair residual tolerance")
    order_eps: float = Field(1e-8, gt=0, description="Tolerance for |lambda^q - 1| on the numeric path")
    numeric_order_cap: int = Field(4096, ge=2, description="Largest denominator tried on the numeric path")
    max_scan_rows: int = Field(2 ** 40, ge=1, description="Largest l^m scanned without an explicit range")


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Load settings once, honouring a local .env file"""
    load_dotenv()

    try:
        settings = Settings(
            log_level=os.getenv("LOG_LEVEL", "INFO").upper(),
            workers=int(os.getenv("BUTSON_WORKERS", "1")),
            checkpoint_every=int(os.getenv("BUTSON_CHECKPOINT_EVERY", "500")),
            eig_residual_tol=float(os.getenv("BUTSON_EIG_RESIDUAL_TOL", "1e-9")),
            order_eps=float(os.getenv("BUTSON_ORDER_EPS", "1e-8")),
            numeric_order_cap=int(os.getenv("BUTSON_NUMERIC_ORDER_CAP", "4096")),
            max_scan_rows=int(os.getenv("BUTSON_MAX_SCAN_ROWS", str(2 ** 40))),
        )
    except (ValueError, ValidationError) as e:
        logger.error(f"Invalid environment settings: {e}")
        raise ConfigurationError(f"Invalid environment settings: {e}")
    logger.debug(f"Loaded settings: {settings.model_dump()}")
    return settings


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format=LOG_FORMAT
    )
