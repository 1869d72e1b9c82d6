"""Tests for rational functions on components and the function group K."""

from math import gcd

import pytest

from torsion_sections.arith import CycloElem, root_of_unity
from torsion_sections.errors import EvaluationError, KConditionError, ShapeMismatchError
from torsion_sections.fiber import Divisor, FiberPoint, FiberShape
from torsion_sections.function_group import (
    KElement,
    RationalFunc,
    abel_check,
    c0,
    c_inf,
    check_conditions,
    div_map,
    evaluate,
    is_constant,
    k_constant,
    k_inv,
    k_mul,
    k_validate,
    n0,
    n_inf,
    order_m_point_divisor,
    order_m_point_element,
    same_up_to_constant,
)

# -- RationalFunc --


def test_create_cancels_common_factors() -> None:
    g = RationalFunc.create(1, 0, [2, 3], [3, 5])
    assert g.zeros == (CycloElem.rational(2),)
    assert g.poles == (CycloElem.rational(5),)


def test_constructor_rejects_uncancelled_factors() -> None:
    with pytest.raises(ValueError):
        RationalFunc(CycloElem.one(), 0, (CycloElem.rational(2),), (CycloElem.rational(2),))


def test_constructor_rejects_zero_scalar_and_node_roots() -> None:
    with pytest.raises(ValueError):
        RationalFunc.constant(0)
    with pytest.raises(ValueError):
        RationalFunc.create(1, 0, [0])


def test_node_data() -> None:
    # g = 2 u (u - 3) / (u - 5) ~ (6/5) u near 0 and ~ 2 near infinity
    g = RationalFunc.create(2, 1, [3], [5])
    assert n0(g) == 1
    assert n_inf(g) == -1
    assert c0(g) == CycloElem.rational(6) / 5
    assert c_inf(g) == 2


def test_evaluate() -> None:
    g = RationalFunc.create(2, 1, [3], [5])
    assert evaluate(g, 1) == 1
    assert evaluate(RationalFunc.create(1, -2), 2) == CycloElem.rational(1) / 4


def test_evaluate_rejects_nodes_zeros_and_poles() -> None:
    g = RationalFunc.create(2, 1, [3], [5])
    for u in (0, 3, 5):
        with pytest.raises(EvaluationError):
            evaluate(g, u)


def test_multiplication_and_inverse() -> None:
    g = RationalFunc.create(2, 1, [3], [5])
    h = RationalFunc.create(1, -1, [5], [7])
    assert g * h == RationalFunc.create(2, 0, [3], [7])
    assert (g * g.inverse()).is_constant()


# -- membership conditions --


def test_length_mismatch_is_reported() -> None:
    violations = check_conditions([RationalFunc.constant(1)], FiberShape(2))
    assert [v.condition for v in violations] == ["length"]


def test_each_condition_reports_its_node() -> None:
    shape = FiberShape(2)
    funcs = [RationalFunc.create(1, 1), RationalFunc.create(2, 0)]
    violations = check_conditions(funcs, shape)
    found = {(v.condition, v.index) for v in violations}
    # a at node 0/1: n_inf(u) + n_0(2) = -1; b at node 0/1: 1 != 2; c: sum n_0 = 1
    assert ("a", 0) in found
    assert ("b", 0) in found
    assert ("c", None) in found


def test_kelement_raises_with_violations() -> None:
    shape = FiberShape(3)
    funcs = [RationalFunc.create(1, 1) for _ in range(3)]
    with pytest.raises(KConditionError) as exc_info:
        k_validate(funcs, shape)
    assert [v.condition for v in exc_info.value.violations] == ["c"]


def test_single_component_condition_wraps_to_itself() -> None:
    shape = FiberShape(1)
    g = RationalFunc.create(1, 0, [2], [3])
    # on I_1, condition b asks c_inf(g_0) = c_0(g_0), i.e. 1 = 2/3
    with pytest.raises(KConditionError):
        KElement(shape, (g,))
    h = RationalFunc.create(1, 0, [2, 3], [1, 6])
    assert div_map(KElement(shape, (h,))).shape == shape


# -- group structure --


def test_constants_and_inverse() -> None:
    shape = FiberShape(3)
    c = k_constant(shape, 5)
    assert is_constant(c) == 5
    g = order_m_point_element(3, 1, 1, root_of_unity(3, 1))
    assert is_constant(g) is None
    assert is_constant(k_mul(g, k_inv(g))) == 1


def test_mul_rejects_shape_mismatch() -> None:
    with pytest.raises(ShapeMismatchError):
        k_mul(k_constant(FiberShape(2), 1), k_constant(FiberShape(3), 1))


def test_div_map_is_a_homomorphism() -> None:
    zeta = root_of_unity(3, 1)
    g = order_m_point_element(3, 1, 0, zeta)
    h = order_m_point_element(3, 1, 2, zeta**2)
    assert div_map(k_mul(g, h)) == div_map(g) + div_map(h)
    assert div_map(k_inv(g)) == -div_map(g)


def test_kernel_of_div_map_is_the_constants() -> None:
    shape = FiberShape(3)
    g = order_m_point_element(3, 1, 1, root_of_unity(3, 2))
    scaled = k_mul(g, k_constant(shape, root_of_unity(5, 1)))
    assert div_map(scaled) == div_map(g)
    assert same_up_to_constant(g, scaled)
    assert not same_up_to_constant(g, order_m_point_element(3, 1, 0, root_of_unity(3, 2)))
    # monomial tuples have empty divisors but only the constant one lies in K
    with pytest.raises(KConditionError):
        KElement(shape, tuple(RationalFunc.create(1, 1) for _ in range(3)))


# -- explicit order-m elements --


def _worked_cases() -> list[tuple[int, int, int, int]]:
    return [
        (m, k, alpha, a)
        for m in (2, 3, 5)
        for k in (1, 2)
        for alpha in range(m)
        for a in range(1, m)
        if gcd(a, m) == 1
    ]


@pytest.mark.parametrize(("m", "k", "alpha", "a"), _worked_cases())
def test_order_m_point_element_has_expected_divisor(m: int, k: int, alpha: int, a: int) -> None:
    zeta = root_of_unity(m, a)
    g = order_m_point_element(m, k, alpha, zeta)
    d = order_m_point_divisor(m, k, alpha, zeta)
    assert div_map(g) == d
    assert abel_check(d)


def test_worked_example_on_i3() -> None:
    zeta = root_of_unity(3, 1)
    shape = FiberShape(3)
    g = order_m_point_element(3, 1, 0, zeta)
    expected = Divisor(
        shape, [(FiberPoint(shape, 0, zeta), 3), (FiberPoint(shape, 0, CycloElem.one()), -3)]
    )
    assert div_map(g) == expected
    assert all(f.is_constant() for f in g.funcs[1:])


def test_order_m_point_element_validates_inputs() -> None:
    with pytest.raises(ValueError):
        order_m_point_element(4, 1, 1, root_of_unity(4, 2))
    with pytest.raises(ValueError):
        order_m_point_element(3, 1, 3, root_of_unity(3, 1))
