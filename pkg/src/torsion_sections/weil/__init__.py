"""The limit Weil pairing and the W* duality."""

from torsion_sections.weil.duality import pairing_preimage, w_star
from torsion_sections.weil.pairing import (
    DEFAULT_EVALUATION_POINTS,
    LimitWeilPairing,
    TorsionLabel,
    explicit_pullback_function,
    pullback_divisor,
    torsion_label,
    weil_definitional,
    weil_formula,
)
from torsion_sections.weil.suite import weil_bilinearity_suite

__all__ = [
    "DEFAULT_EVALUATION_POINTS",
    "LimitWeilPairing",
    "TorsionLabel",
    "explicit_pullback_function",
    "pairing_preimage",
    "pullback_divisor",
    "torsion_label",
    "w_star",
    "weil_bilinearity_suite",
    "weil_definitional",
    "weil_formula",
]
