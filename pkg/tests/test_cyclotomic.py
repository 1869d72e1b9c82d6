"""Tests for exact cyclotomic field arithmetic."""

from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from torsion_sections.arith import (
    CycloElem,
    arith,
    as_root_of_unity,
    embed,
    format_root,
    root_exponent,
    root_of_unity,
    set_order_limit,
)
from torsion_sections.errors import (
    CycloZeroDivisionError,
    EmbeddingError,
    OrderLimitError,
)

ORDERS = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 30, 50]
MIXED_ORDERS = [1, 2, 3, 4, 5, 6, 8, 10, 12]


@st.composite
def cyclo(draw: st.DrawFn, orders: list[int] = ORDERS) -> CycloElem:
    n = draw(st.sampled_from(orders))
    coeffs = draw(st.lists(st.integers(-4, 4), max_size=min(n, 8)))
    return CycloElem.from_poly(n, coeffs)


@st.composite
def same_order_pair(draw: st.DrawFn) -> tuple[CycloElem, CycloElem]:
    n = draw(st.sampled_from(ORDERS))
    return draw(cyclo([n])), draw(cyclo([n]))


# -- construction --


def test_sum_of_primitive_fifth_roots_is_minus_one() -> None:
    total = sum((root_of_unity(5, k) for k in range(1, 5)), CycloElem.zero(5))
    assert total == -1
    assert total.as_fraction() == Fraction(-1)


def test_root_of_unity_powers() -> None:
    i = root_of_unity(4, 1)
    assert i * i == -1
    assert root_of_unity(7, 1) ** 7 == 1
    assert root_of_unity(5, 1) ** -1 == root_of_unity(5, 4)


@pytest.mark.parametrize(("n", "k"), [(n, k) for n in range(1, 31) for k in range(n)])
def test_root_of_unity_has_exact_order(n: int, k: int) -> None:
    x = root_of_unity(n, k)
    order = n // gcd(n, k)
    assert x**n == 1
    root = as_root_of_unity(x)
    assert root is not None
    assert root[0] == order
    assert all(x**d != 1 for d in sympy.divisors(order) if d < order)


def test_coefficient_count_is_checked() -> None:
    with pytest.raises(ValueError):
        CycloElem(5, (Fraction(1),))


# -- mixed orders --


def test_equality_across_orders() -> None:
    assert root_of_unity(6, 2) == root_of_unity(3, 1)
    assert root_of_unity(2, 1) == CycloElem.rational(-1)
    assert embed(root_of_unity(5, 1), 10) == root_of_unity(10, 2)


def test_hash_agrees_with_cross_order_equality() -> None:
    pairs = [
        (root_of_unity(6, 2), root_of_unity(3, 1)),
        (root_of_unity(2, 1), CycloElem.rational(-1)),
        (embed(root_of_unity(5, 3) + 2, 20), root_of_unity(5, 3) + 2),
    ]
    for a, b in pairs:
        assert a == b
        assert hash(a) == hash(b)
        assert len({a, b}) == 1


def test_mixed_order_arithmetic_uses_lcm() -> None:
    value = arith(root_of_unity(4, 1), root_of_unity(6, 1), "mul")
    assert value.order == 12
    assert value == root_of_unity(12, 5)


def test_embed_requires_divisibility() -> None:
    with pytest.raises(EmbeddingError):
        embed(root_of_unity(4, 1), 6)


# -- field axioms --


@settings(max_examples=60, deadline=None)
@given(cyclo(MIXED_ORDERS), cyclo(MIXED_ORDERS), cyclo(MIXED_ORDERS))
def test_ring_axioms(a: CycloElem, b: CycloElem, c: CycloElem) -> None:
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == 0


@settings(max_examples=60, deadline=None)
@given(same_order_pair())
def test_division_inverts_multiplication(pair: tuple[CycloElem, CycloElem]) -> None:
    a, b = pair
    assume(not b.is_zero())
    assert (a / b) * b == a
    assert b * b.inverse() == 1
    assert arith(a, b, "div") == a / b


@settings(max_examples=40, deadline=None)
@given(same_order_pair(), st.sampled_from([2, 3, 5]))
def test_embedding_is_a_homomorphism(pair: tuple[CycloElem, CycloElem], scale: int) -> None:
    a, b = pair
    n = a.order * scale
    assert embed(a + b, n) == embed(a, n) + embed(b, n)
    assert embed(a * b, n) == embed(a, n) * embed(b, n)
    assert embed(a, n).order == n


def test_division_by_zero_raises() -> None:
    with pytest.raises(CycloZeroDivisionError):
        root_of_unity(5, 1) / CycloElem.zero(5)
    with pytest.raises(ZeroDivisionError):
        CycloElem.zero(3).inverse()


# -- roots of unity --


def test_as_root_of_unity_is_canonical() -> None:
    assert as_root_of_unity(CycloElem.rational(-1)) == (2, 1)
    assert as_root_of_unity(root_of_unity(6, 4)) == (3, 2)
    assert as_root_of_unity(-root_of_unity(3, 1)) == (6, 5)
    assert as_root_of_unity(CycloElem.one()) == (1, 0)


def test_as_root_of_unity_rejects_other_values() -> None:
    assert as_root_of_unity(CycloElem.rational(2)) is None
    assert as_root_of_unity(root_of_unity(4, 1) + 1) is None
    assert as_root_of_unity(CycloElem.rational(Fraction(1, 2))) is None


def test_root_exponent_and_format() -> None:
    assert root_exponent(root_of_unity(5, 2), 10) == 4
    assert root_exponent(root_of_unity(4, 1), 6) is None
    assert format_root(root_of_unity(5, 4), 5) == "zeta_5^4"
    assert format_root(CycloElem.one(), 3) == "zeta_3^0"


def test_str_forms() -> None:
    assert str(CycloElem.rational(Fraction(3, 2))) == "3/2"
    assert str(root_of_unity(5, 2)) == "zeta_5^2"
    assert str(root_of_unity(5, 1) + 1) == "1 + zeta_5"


# -- order cap --


def test_order_limit_is_enforced() -> None:
    set_order_limit(10)
    with pytest.raises(OrderLimitError):
        root_of_unity(11, 1)
    assert root_of_unity(10, 1) ** 10 == 1


def test_order_limit_must_be_positive() -> None:
    with pytest.raises(ValueError):
        set_order_limit(0)
