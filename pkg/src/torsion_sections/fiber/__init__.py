"""Smooth part of a type-I_m fiber: points, torsion, divisors."""

from torsion_sections.fiber.group import (
    divisor_degree,
    divisor_sum,
    identity,
    point_add,
    point_multiple,
    point_neg,
    torsion_point,
    torsion_points,
    twist_coordinates,
)
from torsion_sections.fiber.models import Divisor, FiberPoint, FiberShape

__all__ = [
    "Divisor",
    "FiberPoint",
    "FiberShape",
    "divisor_degree",
    "divisor_sum",
    "identity",
    "point_add",
    "point_multiple",
    "point_neg",
    "torsion_point",
    "torsion_points",
    "twist_coordinates",
]
