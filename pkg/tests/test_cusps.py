"""Tests for the cusps of X_1(p), G(p) classes and section numbers."""

import pytest
import sympy

from torsion_sections.arith import root_of_unity
from torsion_sections.data import FiberKind
from torsion_sections.errors import InvalidPrimeError, NonInvertibleError, ZeroSectionError
from torsion_sections.fiber import FiberShape, identity, point_multiple
from torsion_sections.modular import (
    CuspData,
    GpClass,
    SectionId,
    check_prime,
    component_index,
    component_number,
    cusps,
    involution,
    root_of_unity_index,
    root_of_unity_number,
    section_fiber_point,
    total_weight,
)

PRIMES = [5, 7, 11, 13, 17, 19]

# -- levels --


@pytest.mark.parametrize("p", [1, 2, 3, 4, 9, 15])
def test_check_prime_rejects(p: int) -> None:
    with pytest.raises(InvalidPrimeError):
        check_prime(p)


def test_invalid_prime_is_a_value_error() -> None:
    with pytest.raises(ValueError):
        cusps(4)


# -- G(p) --


def test_class_representative_is_canonical() -> None:
    assert GpClass(4, 5).rep == 1
    assert GpClass(-2, 7).rep == 2
    assert GpClass(9, 7) == GpClass(5, 7)
    assert str(GpClass(6, 7)) == "1"


def test_class_of_zero_is_rejected() -> None:
    with pytest.raises(NonInvertibleError):
        GpClass(0, 5)


def test_class_inverse_and_product() -> None:
    c = GpClass(2, 5)
    assert c.inverse() == GpClass(3, 5)
    assert c * c.inverse() == GpClass(1, 5)
    assert 3 in c and 2 in c and 1 not in c


def test_section_id_reduces_alpha() -> None:
    assert SectionId(7, 5).alpha == 2
    assert SectionId(5, 5).is_zero()
    assert str(SectionId(3, 5)) == "T_3"


# -- cusps --


@pytest.mark.parametrize("p", PRIMES)
def test_cusp_count_and_weight(p: int) -> None:
    table = cusps(p)
    assert len(table) == p - 1
    assert sum(1 for c in table if c.kind is FiberKind.I1) == (p - 1) // 2
    assert total_weight(p) == (p * p - 1) // 2


def test_cusps_of_five() -> None:
    table = cusps(5)
    assert [c.rep for c in table] == ["1/5", "2/5", "1/1", "1/2"]
    assert [c.weight for c in table] == [1, 1, 5, 5]
    assert total_weight(5) == 12


@pytest.mark.parametrize("p", PRIMES)
def test_involution_swaps_fiber_types(p: int) -> None:
    for cusp in cusps(p):
        image = involution(cusp)
        assert image.kind is not cusp.kind
        assert involution(image) == cusp


# -- section numbers --


def test_root_of_unity_number_examples() -> None:
    assert root_of_unity_number(5, 1, 2).rep == 2
    assert root_of_unity_number(7, 3, 3).rep == 1
    assert root_of_unity_number(7, SectionId(3, 7), 3).rep == 1


@pytest.mark.parametrize("p", PRIMES)
def test_root_of_unity_index_matches_sympy(p: int) -> None:
    for alpha in range(1, p):
        for r in range(1, (p - 1) // 2 + 1):
            assert root_of_unity_index(p, alpha, r) == alpha * sympy.mod_inverse(r, p) % p


def test_zero_section_has_no_root_of_unity_number() -> None:
    with pytest.raises(ZeroSectionError):
        root_of_unity_number(5, 0, 1)
    with pytest.raises(ZeroSectionError):
        root_of_unity_index(5, SectionId(5, 5), 1)


def test_component_numbers() -> None:
    i1 = CuspData(FiberKind.I1, 2, 7)
    ip = CuspData(FiberKind.IP, 3, 7)
    assert component_index(7, 2, i1) == 0
    assert component_number(7, 2, i1) is None
    assert component_index(7, 2, ip) == 6
    assert component_number(7, 2, ip) == GpClass(1, 7)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_section_fiber_points_have_order_p(p: int) -> None:
    for alpha in range(p):
        for cusp in cusps(p):
            point = section_fiber_point(p, alpha, cusp)
            assert point.shape == FiberShape(cusp.weight)
            assert point_multiple(p, point) == identity(point.shape)


def test_section_fiber_point_layout() -> None:
    i1 = CuspData(FiberKind.I1, 2, 5)
    ip = CuspData(FiberKind.IP, 2, 5)
    assert section_fiber_point(5, 1, i1).coord == root_of_unity(5, 3)
    assert section_fiber_point(5, 1, ip).component == 2
    assert section_fiber_point(5, 0, ip) == identity(FiberShape(5))
