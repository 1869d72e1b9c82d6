"""The function group K of an I_m fiber.

An element is an m-tuple (g_0, ..., g_{m-1}) of nonzero rational functions, g_j
in the standard coordinate u_j of component C_j, subject to

    a) n_inf(g_j) + n_0(g_{j+1}) = 0          for every j (indices mod m)
    b) c_inf(g_j) = c_0(g_{j+1})              for every j
    c) sum_j n_0(g_j) = 0

K is a group under componentwise multiplication, and ``div_map`` sends it to
divisors on F^sm, discarding whatever sits at the nodes.
"""

from collections.abc import Sequence
from dataclasses import dataclass

from torsion_sections.arith import CycloElem, as_root_of_unity
from torsion_sections.errors import ConditionViolation, KConditionError, ShapeMismatchError
from torsion_sections.fiber import Divisor, FiberPoint, FiberShape
from torsion_sections.function_group.rational import RationalFunc, c0, c_inf, n0, n_inf


def check_conditions(funcs: Sequence[RationalFunc], shape: FiberShape) -> list[ConditionViolation]:
    """All violated membership conditions; empty when the tuple lies in K."""
    m = shape.m
    if len(funcs) != m:
        return [ConditionViolation("length", None, f"expected {m} functions, got {len(funcs)}")]
    violations: list[ConditionViolation] = []
    for j in range(m):
        nxt = (j + 1) % m
        order_sum = n_inf(funcs[j]) + n0(funcs[nxt])
        if order_sum != 0:
            violations.append(
                ConditionViolation("a", j, f"n_inf(g_{j}) + n_0(g_{nxt}) = {order_sum}")
            )
        left, right = c_inf(funcs[j]), c0(funcs[nxt])
        if left != right:
            violations.append(
                ConditionViolation("b", j, f"c_inf(g_{j}) = {left} but c_0(g_{nxt}) = {right}")
            )
    total = sum(n0(g) for g in funcs)
    if total != 0:
        violations.append(ConditionViolation("c", None, f"sum of n_0(g_j) = {total}"))
    return violations


@dataclass(frozen=True)
class KElement:
    """A validated element of the function group of ``shape``."""

    shape: FiberShape
    funcs: tuple[RationalFunc, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "funcs", tuple(self.funcs))
        violations = check_conditions(self.funcs, self.shape)
        if violations:
            raise KConditionError(violations)

    def __str__(self) -> str:
        return "; ".join(f"g_{j} = {g}" for j, g in enumerate(self.funcs))


def k_validate(funcs: Sequence[RationalFunc], shape: FiberShape) -> KElement:
    """Check conditions a-c exactly and wrap the tuple.

    Raises:
        KConditionError: Listing every violated condition with its node index.
    """
    return KElement(shape, tuple(funcs))


def k_constant(shape: FiberShape, c: CycloElem | int) -> KElement:
    return KElement(shape, tuple(RationalFunc.constant(c) for _ in range(shape.m)))


def k_mul(g: KElement, h: KElement) -> KElement:
    if g.shape != h.shape:
        msg = f"cannot multiply elements of K({g.shape}) and K({h.shape})"
        raise ShapeMismatchError(msg)
    return KElement(g.shape, tuple(a * b for a, b in zip(g.funcs, h.funcs, strict=True)))


def k_inv(g: KElement) -> KElement:
    return KElement(g.shape, tuple(f.inverse() for f in g.funcs))


def div_map(g: KElement) -> Divisor:
    """Zeros minus poles of every g_j on F^sm; the monomial parts sit at nodes and drop out."""
    terms: list[tuple[FiberPoint, int]] = []
    for j, func in enumerate(g.funcs):
        terms.extend((FiberPoint(g.shape, j, lam), 1) for lam in func.zeros)
        terms.extend((FiberPoint(g.shape, j, mu), -1) for mu in func.poles)
    return Divisor(g.shape, terms)


def is_constant(g: KElement) -> CycloElem | None:
    """The common value c when every g_j is the constant c."""
    first = g.funcs[0]
    if not first.is_constant():
        return None
    if all(f.is_constant() and f.alpha == first.alpha for f in g.funcs):
        return first.alpha
    return None


def same_up_to_constant(g: KElement, h: KElement) -> bool:
    """Whether g and h differ by a constant element (equivalently have equal divisors)."""
    return is_constant(k_mul(g, k_inv(h))) is not None


def order_m_point_divisor(m: int, k: int, alpha: int, zeta: CycloElem) -> Divisor:
    """D = m*(p) - m*(0) for p the point of C_{alpha k} with coordinate zeta, on I_{mk}."""
    shape = FiberShape(m * k)
    p = FiberPoint(shape, alpha * k, zeta)
    origin = FiberPoint(shape, 0, CycloElem.one())
    return Divisor(shape, [(p, m), (origin, -m)])


def order_m_point_element(m: int, k: int, alpha: int, zeta: CycloElem) -> KElement:
    """The explicit element of K(I_{mk}) whose divisor is ``order_m_point_divisor``.

    ``zeta`` must be a primitive m-th root of unity and ``0 <= alpha < m``.
    """
    root = as_root_of_unity(zeta)
    if root is None or root[0] != m:
        msg = f"{zeta} is not a primitive {m}-th root of unity"
        raise ValueError(msg)
    if not 0 <= alpha < m:
        msg = f"alpha must lie in [0, {m - 1}], got {alpha}"
        raise ValueError(msg)
    shape = FiberShape(m * k)
    one = CycloElem.one()
    if alpha == 0:
        g0 = RationalFunc.create(1, 0, [zeta] * m, [one] * m)
        return KElement(shape, (g0, *(RationalFunc.constant(1) for _ in range(m * k - 1))))

    sign = (-1) ** m
    pivot = alpha * k
    funcs: list[RationalFunc] = [RationalFunc.create(1, alpha, [], [one] * m)]
    for j in range(1, m * k):
        if j < pivot:
            funcs.append(RationalFunc.create(1, alpha - m))
        elif j == pivot:
            funcs.append(RationalFunc.create(sign, alpha - m, [zeta] * m))
        else:
            funcs.append(RationalFunc.create(sign, alpha))
    return KElement(shape, tuple(funcs))
