"""Pydantic configuration models for torsion-sections."""

from pydantic import BaseModel, Field, field_validator

from torsion_sections.arith import DEFAULT_MAX_ORDER
from torsion_sections.weil import DEFAULT_EVALUATION_POINTS

# ============================================================
# Arithmetic
# ============================================================


class CyclotomicConfig(BaseModel):
    """Limits of the cyclotomic field arithmetic."""

    max_order: int = Field(default=DEFAULT_MAX_ORDER, gt=0)

    model_config = {"frozen": True}


# ============================================================
# Weil pairing
# ============================================================


class WeilConfig(BaseModel):
    """Definitional Weil pairing evaluation."""

    evaluation_points: tuple[int, ...] = DEFAULT_EVALUATION_POINTS

    model_config = {"frozen": True}

    @field_validator("evaluation_points")
    @classmethod
    def points_must_be_generic(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if not v:
            raise ValueError("at least one evaluation point is required")
        if any(x in (-1, 0, 1) for x in v):
            raise ValueError("evaluation points must avoid 0 and the roots of unity +-1")
        return v


# ============================================================
# Verification sweeps
# ============================================================


class SweepConfig(BaseModel):
    """Parameter ranges swept by the ``verify`` command."""

    primes: tuple[int, ...] = (5, 7, 11, 13, 17, 19)
    weil_orders: tuple[int, ...] = (2, 3, 4, 5, 6, 7)
    base_change: tuple[int, ...] = (1, 2)

    model_config = {"frozen": True}

    @field_validator("weil_orders", "base_change")
    @classmethod
    def must_be_positive(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if any(x < 1 for x in v):
            raise ValueError("orders and base-change degrees must be positive")
        return v


# ============================================================
# Logging Config
# ============================================================


class LoggingConfig(BaseModel):
    """Run records and log verbosity."""

    enabled: bool = False
    log_dir: str = "logs"
    level: str = "INFO"

    model_config = {"frozen": True}


# ============================================================
# Root Config
# ============================================================


class TorsionConfig(BaseModel):
    """Root configuration for torsion-sections."""

    cyclotomic: CyclotomicConfig = Field(default_factory=CyclotomicConfig)
    weil: WeilConfig = Field(default_factory=WeilConfig)
    sweep: SweepConfig = Field(default_factory=SweepConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    model_config = {"frozen": True}
