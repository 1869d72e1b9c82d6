"""Equidistribution of component numbers and root-of-unity numbers.

M_i(T_alpha) is the weight of the fibers whose component number is +-i, over
the total weight (p^2 - 1)/2; R_i(T_alpha) is the weight of the fibers with
component number 0 and root-of-unity number +-i, over the weight of all fibers
with component number 0. Fibers are weighted by their number of components.

Each fraction is computed from the formula tables and, independently, by
counting the points where T_alpha meets the fibers.
"""

from collections.abc import Sequence
from fractions import Fraction

from torsion_sections.arith import root_exponent
from torsion_sections.errors import InvariantViolation, ZeroSectionError
from torsion_sections.fiber import identity, point_multiple
from torsion_sections.modular.cusps import GpClass, check_prime, cusps, half
from torsion_sections.modular.numbers import (
    component_index,
    component_number,
    root_of_unity_index,
    root_of_unity_number,
    section_fiber_point,
)

SMALL_PRIMES = (2, 3)


def _check_section(p: int, alpha: int) -> None:
    if alpha % p == 0:
        msg = "equidistribution fractions are defined for nonzero sections only"
        raise ZeroSectionError(msg)


def _check_class(p: int, i: int, *, allow_zero: bool) -> None:
    low = 0 if allow_zero else 1
    if not low <= i <= half(p):
        msg = f"class index must lie in [{low}, {half(p)}] for p = {p}, got {i}"
        raise ValueError(msg)


# -- component numbers --


def m_fraction(p: int, alpha: int, i: int) -> Fraction:
    """M_i(T_alpha) from the component-number table."""
    check_prime(p)
    _check_section(p, alpha)
    _check_class(p, i, allow_zero=True)
    total = 0
    hits = 0
    for cusp in cusps(p):
        k = component_number(p, alpha, cusp)
        total += cusp.weight
        if (k.rep if k is not None else 0) == i:
            hits += cusp.weight
    return Fraction(hits, total)


def m_fraction_closed_form(p: int, i: int) -> Fraction:
    """1/(p+1) for i = 0, 2p/(p^2-1) otherwise."""
    return Fraction(1, p + 1) if i == 0 else Fraction(2 * p, p * p - 1)


def m_fractions_by_counting(p: int, alpha: int) -> dict[int, Fraction]:
    """All M_i at once, read off the fiber points of T_alpha."""
    check_prime(p)
    _check_section(p, alpha)
    weights = dict.fromkeys(range(half(p) + 1), 0)
    for cusp in cusps(p):
        point = section_fiber_point(p, alpha, cusp)
        if point_multiple(p, point) != identity(point.shape):
            msg = f"T_{alpha} does not meet the fiber over {cusp} in a point of order p"
            raise InvariantViolation(msg)
        cls = GpClass(point.component, p).rep if point.component else 0
        weights[cls] += point.shape.m
    total = sum(weights.values())
    return {i: Fraction(w, total) for i, w in weights.items()}


# -- root-of-unity numbers --


def r_fraction(p: int, alpha: int, i: int) -> Fraction:
    """R_i(T_alpha) from the root-of-unity table.

    For p = 2 and p = 3 there is a single class in G(p), so R_1 = 1 without any
    cusp enumeration.
    """
    if p in SMALL_PRIMES:
        _check_section(p, alpha)
        if i != 1:
            msg = f"G({p}) has the single class 1, got {i}"
            raise ValueError(msg)
        return Fraction(1)
    check_prime(p)
    _check_section(p, alpha)
    _check_class(p, i, allow_zero=False)
    total = 0
    hits = 0
    for cusp in cusps(p):
        if component_index(p, alpha, cusp):
            continue
        total += cusp.weight
        if root_of_unity_number(p, alpha, cusp.index).rep == i:
            hits += cusp.weight
    return Fraction(hits, total)


def r_fraction_closed_form(p: int) -> Fraction:
    """2/(p-1) for odd p; the single class of G(2) carries everything."""
    return Fraction(1) if p == 2 else Fraction(2, p - 1)


def r_fractions_by_counting(p: int, alpha: int) -> dict[int, Fraction]:
    """All R_i at once, from the coordinates where T_alpha meets identity components."""
    check_prime(p)
    _check_section(p, alpha)
    weights = dict.fromkeys(range(1, half(p) + 1), 0)
    for cusp in cusps(p):
        point = section_fiber_point(p, alpha, cusp)
        if point.component:
            continue
        exponent = root_exponent(point.coord, p)
        if not exponent:
            msg = f"T_{alpha} meets the zero section over {cusp}"
            raise InvariantViolation(msg)
        weights[GpClass(exponent, p).rep] += point.shape.m
    total = sum(weights.values())
    return {i: Fraction(w, total) for i, w in weights.items()}


# -- matrix Z and disjointness --


def z_matrix(p: int) -> list[list[GpClass]]:
    """Z[i][j] = +-l_j(T_i) = class of i j^-1, for i, j = 1 .. (p-1)/2 (0-based lists)."""
    check_prime(p)
    size = half(p)
    return [
        [root_of_unity_number(p, i, j) for j in range(1, size + 1)] for i in range(1, size + 1)
    ]


def is_latin_square(matrix: Sequence[Sequence[GpClass]]) -> bool:
    """Every row and every column is a permutation of the same symbol set."""
    if not matrix:
        return True
    symbols = set(matrix[0])
    if len(symbols) != len(matrix) or any(len(row) != len(matrix) for row in matrix):
        return False
    rows_ok = all(set(row) == symbols and len(row) == len(symbols) for row in matrix)
    columns_ok = all({row[j] for row in matrix} == symbols for j in range(len(matrix)))
    return rows_ok and columns_ok


def sections_disjoint(p: int) -> bool:
    """Over every I_1 cusp the p - 1 nonzero sections meet C_0 at distinct points."""
    check_prime(p)
    for r in range(1, half(p) + 1):
        values = {root_of_unity_index(p, alpha, r) for alpha in range(1, p)}
        if len(values) != p - 1 or 0 in values:
            return False
    return True


def component_numbers_additive(p: int) -> bool:
    """k(T_{a+b}) = k(T_a) + k(T_b) mod p at every I_p cusp, for all a and b."""
    check_prime(p)
    for cusp in cusps(p):
        for a in range(p):
            for b in range(p):
                total = component_index(p, a + b, cusp)
                if total != (component_index(p, a, cusp) + component_index(p, b, cusp)) % p:
                    return False
    return True
