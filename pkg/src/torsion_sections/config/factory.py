"""Factory functions to create components from configuration."""

from pathlib import Path

from torsion_sections.arith import set_order_limit
from torsion_sections.config.models import TorsionConfig
from torsion_sections.run_logger import RunLogger
from torsion_sections.weil import LimitWeilPairing


def create_pairing(config: TorsionConfig) -> LimitWeilPairing:
    return LimitWeilPairing(config.weil.evaluation_points)


def create_from_config(
    config: TorsionConfig,
    *,
    log_override: bool | None = None,
    log_dir_override: str | None = None,
) -> tuple[LimitWeilPairing, RunLogger | None]:
    """Apply process-wide settings and create the components a run needs.

    Args:
        config: Root configuration.
        log_override: Override the config's logging.enabled setting.
        log_dir_override: Override the config's logging.log_dir setting.

    Returns:
        Tuple of (pairing, run_logger); run_logger is None if logging is disabled.
    """
    set_order_limit(config.cyclotomic.max_order)

    run_logger: RunLogger | None = None
    log_enabled = log_override if log_override is not None else config.logging.enabled
    log_dir = Path(log_dir_override if log_dir_override is not None else config.logging.log_dir)
    if log_enabled:
        run_logger = RunLogger(log_dir=log_dir, enabled=True)

    return create_pairing(config), run_logger
