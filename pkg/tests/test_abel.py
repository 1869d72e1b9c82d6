"""Property tests for Abel's theorem on I_m fibers."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torsion_sections.arith import CycloElem, root_of_unity
from torsion_sections.errors import NotPrincipalError
from torsion_sections.fiber import (
    Divisor,
    FiberPoint,
    FiberShape,
    divisor_degree,
    divisor_sum,
    identity,
)
from torsion_sections.function_group import (
    KElement,
    abel_check,
    abel_witness,
    div_map,
    k_constant,
    k_mul,
    order_m_point_element,
    same_up_to_constant,
)

SHAPES = [FiberShape(m) for m in (1, 2, 3, 4, 6)]
SHAPE_IDS = [f"I{shape.m}" for shape in SHAPES]


@st.composite
def coordinates(draw: st.DrawFn) -> CycloElem:
    n = draw(st.sampled_from([1, 2, 3, 4, 6]))
    scale = draw(st.sampled_from([1, 1, 1, 2, -3]))
    return scale * root_of_unity(n, draw(st.integers(0, n - 1)))


@st.composite
def divisors(draw: st.DrawFn, shape: FiberShape) -> Divisor:
    size = draw(st.integers(0, 5))
    terms = [
        (
            FiberPoint(shape, draw(st.integers(0, shape.m - 1)), draw(coordinates())),
            draw(st.integers(-3, 3)),
        )
        for _ in range(size)
    ]
    return Divisor(shape, terms)


@st.composite
def principal_divisors(draw: st.DrawFn, shape: FiberShape) -> Divisor:
    """D0 - (Phi(D0)) - (deg D0 - 1)(0): degree 0 and summing to the origin."""
    d0 = draw(divisors(shape))
    correction = Divisor(
        shape, [(divisor_sum(d0), -1), (identity(shape), -(divisor_degree(d0) - 1))]
    )
    return d0 + correction


# -- principal divisors --


@pytest.mark.parametrize("shape", SHAPES, ids=SHAPE_IDS)
@settings(max_examples=500, deadline=None)
@given(data=st.data())
def test_witness_exists_for_principal_divisors(shape: FiberShape, data: st.DataObject) -> None:
    d = data.draw(principal_divisors(shape))
    assert abel_check(d)
    g = abel_witness(d)
    assert div_map(g) == d
    assert g.funcs[0].alpha == 1


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SHAPES).flatmap(principal_divisors), st.integers(0, 3), st.integers(1, 3))
def test_non_principal_divisors_are_refused(d: Divisor, component: int, n: int) -> None:
    shape = d.shape
    moved = d + Divisor(
        shape,
        [(FiberPoint(shape, component, CycloElem.rational(n + 1)), 1), (identity(shape), -1)],
    )
    assert not abel_check(moved)
    with pytest.raises(NotPrincipalError):
        abel_witness(moved)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(SHAPES).flatmap(principal_divisors))
def test_nonzero_degree_is_refused(d: Divisor) -> None:
    shifted = d + Divisor.point(identity(d.shape))
    assert not abel_check(shifted)
    with pytest.raises(NotPrincipalError):
        abel_witness(shifted)


@pytest.mark.parametrize("shape", SHAPES, ids=SHAPE_IDS)
@settings(max_examples=500, deadline=None)
@given(data=st.data())
def test_witness_exists_exactly_when_abel_check_passes(
    shape: FiberShape, data: st.DataObject
) -> None:
    d = data.draw(divisors(shape))
    if abel_check(d):
        assert div_map(abel_witness(d)) == d
    else:
        with pytest.raises(NotPrincipalError):
            abel_witness(d)


def test_zero_divisor_has_constant_witness() -> None:
    shape = FiberShape(4)
    g = abel_witness(Divisor(shape))
    assert all(f.is_constant() and f.alpha == 1 for f in g.funcs)


def test_witness_is_unique_up_to_constants() -> None:
    zeta = root_of_unity(3, 1)
    g = order_m_point_element(3, 2, 2, zeta)
    witness = abel_witness(div_map(g))
    assert same_up_to_constant(g, witness)


# -- elements of K --


@st.composite
def k_elements(draw: st.DrawFn) -> KElement:
    m = draw(st.sampled_from([2, 3]))
    k = draw(st.sampled_from([1, 2]))
    g = k_constant(FiberShape(m * k), draw(st.sampled_from([1, 2, -1])))
    for _ in range(draw(st.integers(1, 3))):
        a = draw(st.sampled_from([1, m - 1]))
        alpha = draw(st.integers(0, m - 1))
        g = k_mul(g, order_m_point_element(m, k, alpha, root_of_unity(m, a)))
    return g


@settings(max_examples=200, deadline=None)
@given(k_elements())
def test_divisors_of_k_elements_are_principal(g: KElement) -> None:
    assert abel_check(div_map(g))
