"""The function group K of a degenerate fiber and the Abel theorem."""

from torsion_sections.function_group.abel import abel_check, abel_witness
from torsion_sections.function_group.kgroup import (
    KElement,
    check_conditions,
    div_map,
    is_constant,
    k_constant,
    k_inv,
    k_mul,
    k_validate,
    order_m_point_divisor,
    order_m_point_element,
    same_up_to_constant,
)
from torsion_sections.function_group.rational import (
    RationalFunc,
    c0,
    c_inf,
    evaluate,
    n0,
    n_inf,
)

__all__ = [
    "KElement",
    "RationalFunc",
    "abel_check",
    "abel_witness",
    "c0",
    "c_inf",
    "check_conditions",
    "div_map",
    "evaluate",
    "is_constant",
    "k_constant",
    "k_inv",
    "k_mul",
    "k_validate",
    "n0",
    "n_inf",
    "order_m_point_divisor",
    "order_m_point_element",
    "same_up_to_constant",
]
