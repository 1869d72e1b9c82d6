"""Exact rational, polynomial and cyclotomic arithmetic."""

from torsion_sections.arith.cyclotomic import (
    DEFAULT_MAX_ORDER,
    CycloElem,
    arith,
    as_root_of_unity,
    embed,
    format_root,
    get_order_limit,
    root_exponent,
    root_of_unity,
    set_order_limit,
)
from torsion_sections.arith.polynomial import (
    cyclotomic_polynomial,
    euler_phi,
    poly_divmod,
    poly_inverse_mod,
    poly_mul,
    poly_xgcd,
)

__all__ = [
    "DEFAULT_MAX_ORDER",
    "CycloElem",
    "arith",
    "as_root_of_unity",
    "cyclotomic_polynomial",
    "embed",
    "euler_phi",
    "format_root",
    "get_order_limit",
    "poly_divmod",
    "poly_inverse_mod",
    "poly_mul",
    "poly_xgcd",
    "root_exponent",
    "root_of_unity",
    "set_order_limit",
]
