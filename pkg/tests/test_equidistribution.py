"""Tests for the equidistribution of component numbers and roots of unity."""

from fractions import Fraction

import pytest

from torsion_sections.errors import InvalidPrimeError, ZeroSectionError
from torsion_sections.modular import (
    GpClass,
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

PRIMES = [5, 7, 11, 13, 17, 19]

# -- component numbers --


def test_m_fractions_for_five() -> None:
    assert m_fraction(5, 1, 0) == Fraction(1, 6)
    assert m_fraction(5, 1, 1) == Fraction(5, 12)
    assert m_fraction(5, 1, 2) == Fraction(5, 12)


@pytest.mark.parametrize("p", PRIMES)
def test_m_fractions_match_closed_form(p: int) -> None:
    half = (p - 1) // 2
    for alpha in range(1, p):
        counted = m_fractions_by_counting(p, alpha)
        assert sum(counted.values()) == 1
        for i in range(half + 1):
            value = m_fraction(p, alpha, i)
            assert value == m_fraction_closed_form(p, i)
            assert value == counted[i]


def test_m_fraction_closed_form_values() -> None:
    assert m_fraction_closed_form(7, 0) == Fraction(1, 8)
    assert m_fraction_closed_form(7, 2) == Fraction(14, 48)


def test_m_fraction_rejects_bad_class() -> None:
    with pytest.raises(ValueError):
        m_fraction(5, 1, 3)


# -- roots of unity --


def test_r_fractions_for_five() -> None:
    assert r_fraction(5, 1, 1) == Fraction(1, 2)
    assert r_fraction(5, 1, 2) == Fraction(1, 2)


def test_r_fractions_for_thirteen() -> None:
    assert all(r_fraction(13, 7, i) == Fraction(1, 6) for i in range(1, 7))


@pytest.mark.parametrize("p", PRIMES)
def test_r_fractions_match_closed_form(p: int) -> None:
    for alpha in range(1, p):
        counted = r_fractions_by_counting(p, alpha)
        for i in range(1, (p - 1) // 2 + 1):
            value = r_fraction(p, alpha, i)
            assert value == r_fraction_closed_form(p)
            assert value == counted[i]


@pytest.mark.parametrize("p", [2, 3])
def test_small_primes_have_a_single_class(p: int) -> None:
    assert r_fraction(p, 1, 1) == 1
    assert r_fraction_closed_form(p) == 1


@pytest.mark.parametrize("p", [2, 3])
def test_small_primes_reject_other_classes(p: int) -> None:
    with pytest.raises(ValueError, match="single class"):
        r_fraction(p, 1, 2)


def test_r_fraction_rejects_class_zero() -> None:
    with pytest.raises(ValueError):
        r_fraction(5, 1, 0)


def test_zero_section_is_rejected() -> None:
    with pytest.raises(ZeroSectionError):
        m_fraction(5, 0, 0)
    with pytest.raises(ZeroSectionError):
        r_fraction(5, 5, 1)
    with pytest.raises(ZeroSectionError):
        r_fraction(3, 0, 1)


def test_composite_level_is_rejected() -> None:
    with pytest.raises(InvalidPrimeError):
        m_fraction(9, 1, 0)


# -- matrix Z --


def test_z_matrix_for_five() -> None:
    assert [[c.rep for c in row] for row in z_matrix(5)] == [[1, 2], [2, 1]]


@pytest.mark.parametrize("p", PRIMES)
def test_z_matrix_is_latin(p: int) -> None:
    matrix = z_matrix(p)
    assert len(matrix) == (p - 1) // 2
    assert is_latin_square(matrix)


def test_is_latin_square_detects_repeats() -> None:
    one, two = GpClass(1, 5), GpClass(2, 5)
    assert not is_latin_square([[one, one], [two, two]])
    assert not is_latin_square([[one, two], [one, two]])
    assert is_latin_square([])


# -- sections --


@pytest.mark.parametrize("p", PRIMES)
def test_sections_are_disjoint_and_additive(p: int) -> None:
    assert sections_disjoint(p)
    assert component_numbers_additive(p)
