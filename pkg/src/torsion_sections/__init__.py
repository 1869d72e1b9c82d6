"""Torsion Sections: exact arithmetic for torsion sections of semistable elliptic surfaces."""

from torsion_sections.arith import (
    CycloElem,
    as_root_of_unity,
    embed,
    format_root,
    root_of_unity,
    set_order_limit,
)
from torsion_sections.config import TorsionConfig, create_from_config, load_config
from torsion_sections.data import Check, FiberKind, OutputFormat, SuiteReport
from torsion_sections.errors import (
    CodecError,
    InvariantViolation,
    KConditionError,
    NotPrincipalError,
    TorsionError,
)
from torsion_sections.fiber import (
    Divisor,
    FiberPoint,
    FiberShape,
    divisor_degree,
    divisor_sum,
    point_add,
    point_multiple,
    torsion_points,
    twist_coordinates,
)
from torsion_sections.function_group import (
    KElement,
    RationalFunc,
    abel_check,
    abel_witness,
    div_map,
    k_mul,
    k_validate,
)
from torsion_sections.modular import (
    CuspData,
    GpClass,
    SectionId,
    component_number,
    cusps,
    duality_check,
    m_fraction,
    r_fraction,
    root_of_unity_number,
    z_matrix,
)
from torsion_sections.run_logger import RunLogger
from torsion_sections.verify import VerificationRunner
from torsion_sections.weil import (
    LimitWeilPairing,
    TorsionLabel,
    w_star,
    weil_bilinearity_suite,
    weil_definitional,
    weil_formula,
)

__all__ = [
    # Arithmetic
    "CycloElem",
    "as_root_of_unity",
    "embed",
    "format_root",
    "root_of_unity",
    "set_order_limit",
    # Fibers
    "Divisor",
    "FiberPoint",
    "FiberShape",
    "divisor_degree",
    "divisor_sum",
    "point_add",
    "point_multiple",
    "torsion_points",
    "twist_coordinates",
    # Function group
    "KElement",
    "RationalFunc",
    "abel_check",
    "abel_witness",
    "div_map",
    "k_mul",
    "k_validate",
    # Weil pairing
    "LimitWeilPairing",
    "TorsionLabel",
    "w_star",
    "weil_bilinearity_suite",
    "weil_definitional",
    "weil_formula",
    # Modular surface
    "CuspData",
    "GpClass",
    "SectionId",
    "component_number",
    "cusps",
    "duality_check",
    "m_fraction",
    "r_fraction",
    "root_of_unity_number",
    "z_matrix",
    # Reports
    "Check",
    "FiberKind",
    "OutputFormat",
    "SuiteReport",
    "VerificationRunner",
    # Errors
    "CodecError",
    "InvariantViolation",
    "KConditionError",
    "NotPrincipalError",
    "TorsionError",
    # Logging
    "RunLogger",
    # Config
    "TorsionConfig",
    "create_from_config",
    "load_config",
]
