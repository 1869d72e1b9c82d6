"""Cusp and section combinatorics of the universal surface over X_1(p)."""

from torsion_sections.modular.cusps import (
    CuspData,
    GpClass,
    SectionId,
    check_prime,
    cusps,
    involution,
    total_weight,
)
from torsion_sections.modular.duality import (
    QuotientRow,
    duality_check,
    quotient_component_numbers,
    weil_cross_check,
)
from torsion_sections.modular.equidistribution import (
    component_numbers_additive,
    is_latin_square,
    m_fraction,
    m_fraction_closed_form,
    m_fractions_by_counting,
    r_fraction,
    r_fraction_closed_form,
    r_fractions_by_counting,
    sections_disjoint,
    z_matrix,
)
from torsion_sections.modular.numbers import (
    component_index,
    component_number,
    root_of_unity_index,
    root_of_unity_number,
    section_fiber_point,
)

__all__ = [
    "CuspData",
    "GpClass",
    "QuotientRow",
    "SectionId",
    "check_prime",
    "component_index",
    "component_number",
    "component_numbers_additive",
    "cusps",
    "duality_check",
    "involution",
    "is_latin_square",
    "m_fraction",
    "m_fraction_closed_form",
    "m_fractions_by_counting",
    "quotient_component_numbers",
    "r_fraction",
    "r_fraction_closed_form",
    "r_fractions_by_counting",
    "root_of_unity_index",
    "root_of_unity_number",
    "section_fiber_point",
    "sections_disjoint",
    "total_weight",
    "weil_cross_check",
    "z_matrix",
]
