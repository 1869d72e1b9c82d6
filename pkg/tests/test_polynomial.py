"""Tests for dense polynomials over Q and the cyclotomic polynomials."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from torsion_sections.arith import (
    cyclotomic_polynomial,
    euler_phi,
    poly_divmod,
    poly_inverse_mod,
    poly_mul,
    poly_xgcd,
)
from torsion_sections.arith.polynomial import normalize, poly_add

polys = st.lists(st.integers(-6, 6), max_size=6).map(normalize)
nonzero_polys = polys.filter(bool)

# -- normalize --


def test_normalize_strips_trailing_zeros() -> None:
    assert normalize([1, 0, 0]) == (Fraction(1),)
    assert normalize([0, 0]) == ()
    assert normalize([]) == ()


# -- division --


@given(polys, nonzero_polys)
def test_divmod_reconstructs_dividend(a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> None:
    q, r = poly_divmod(a, b)
    assert poly_add(poly_mul(q, b), r) == a
    assert len(r) < len(b)


def test_divmod_by_zero_raises() -> None:
    with pytest.raises(ZeroDivisionError):
        poly_divmod([1, 2], [])


@given(polys, polys)
def test_xgcd_bezout_identity(a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> None:
    g, s, t = poly_xgcd(a, b)
    assert poly_add(poly_mul(s, a), poly_mul(t, b)) == g
    if g:
        assert g[-1] == 1


def test_inverse_mod_phi_5() -> None:
    phi = cyclotomic_polynomial(5)
    inv = poly_inverse_mod([1, 1], phi)
    _, rem = poly_divmod(poly_mul([1, 1], inv), phi)
    assert rem == (Fraction(1),)


def test_inverse_mod_rejects_common_factor() -> None:
    with pytest.raises(ZeroDivisionError):
        poly_inverse_mod([-1, 1], [-1, 0, 1])


# -- cyclotomic polynomials --


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_polynomial_matches_sympy(n: int) -> None:
    x = sympy.Symbol("x")
    expected = [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs())]
    assert list(cyclotomic_polynomial(n)) == expected


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_degree_is_totient(n: int) -> None:
    assert len(cyclotomic_polynomial(n)) - 1 == euler_phi(n) == sympy.totient(n)


def test_small_cyclotomic_polynomials() -> None:
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)


def test_cyclotomic_polynomial_rejects_zero() -> None:
    with pytest.raises(ValueError):
        cyclotomic_polynomial(0)
