"""Configuration module for torsion-sections."""

from torsion_sections.config.factory import create_from_config, create_pairing
from torsion_sections.config.loader import MAX_ORDER_ENV, get_default_config_path, load_config
from torsion_sections.config.models import (
    CyclotomicConfig,
    LoggingConfig,
    SweepConfig,
    TorsionConfig,
    WeilConfig,
)

__all__ = [
    "MAX_ORDER_ENV",
    "CyclotomicConfig",
    "LoggingConfig",
    "SweepConfig",
    "TorsionConfig",
    "WeilConfig",
    "create_from_config",
    "create_pairing",
    "get_default_config_path",
    "load_config",
]
