"""YAML configuration loading utilities."""

import logging
import os
from pathlib import Path
from typing import Any

import yaml

from torsion_sections.config.models import TorsionConfig

logger = logging.getLogger(__name__)

MAX_ORDER_ENV = "TORSION_MAX_ORDER"


def load_config(path: Path | str | None = None) -> TorsionConfig:
    """Load configuration from a YAML file and apply environment overrides.

    Args:
        path: Path to YAML config file; None loads the built-in defaults.

    Returns:
        Validated TorsionConfig.

    Raises:
        FileNotFoundError: If config file doesn't exist.
        pydantic.ValidationError: If config is invalid.
    """
    raw: dict[str, Any] = {}
    if path is not None:
        with Path(path).open() as f:
            raw = yaml.safe_load(f) or {}

    override = os.environ.get(MAX_ORDER_ENV)
    if override is not None:
        logger.debug("%s=%s overrides cyclotomic.max_order", MAX_ORDER_ENV, override)
        cyclotomic = dict(raw.get("cyclotomic") or {})
        cyclotomic["max_order"] = override
        raw["cyclotomic"] = cyclotomic

    return TorsionConfig.model_validate(raw)


def get_default_config_path() -> Path:
    """Get path to default config file."""
    return Path(__file__).parents[3] / "configs" / "default.yaml"
