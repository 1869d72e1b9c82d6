"""The limit Weil pairing on the m-torsion of an I_{mk} fiber.

Points of order dividing m are labelled M(t, s) = tT + sS, where T = (zeta_m, C_0)
and S = (1, C_k). The pairing is computed two ways: by the closed formula
zeta_m^(t1 s2 - t2 s1), and from its definition e_m(P, Q) = g(X + P) / g(X),
where g in K has divisor [m]^*(Q) - [m]^*(0).
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from torsion_sections.arith import CycloElem, as_root_of_unity, root_exponent, root_of_unity
from torsion_sections.errors import (
    EvaluationError,
    InvariantViolation,
    ShapeMismatchError,
    TorsionShapeError,
)
from torsion_sections.fiber import Divisor, FiberPoint, FiberShape, point_add, torsion_point
from torsion_sections.function_group import (
    KElement,
    RationalFunc,
    abel_witness,
    evaluate,
)

logger = logging.getLogger(__name__)

DEFAULT_EVALUATION_POINTS: tuple[int, ...] = (2, 3, 5, 7, 11, 13)


@dataclass(frozen=True)
class TorsionLabel:
    """The point M(t, s) = tT + sS of order dividing m, with t and s reduced mod m."""

    t: int
    s: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            msg = f"torsion order must be positive, got {self.m}"
            raise ValueError(msg)
        object.__setattr__(self, "t", self.t % self.m)
        object.__setattr__(self, "s", self.s % self.m)

    def __add__(self, other: "TorsionLabel") -> "TorsionLabel":
        _check_order(self, other)
        return TorsionLabel(self.t + other.t, self.s + other.s, self.m)

    def __neg__(self) -> "TorsionLabel":
        return TorsionLabel(-self.t, -self.s, self.m)

    def __rmul__(self, n: int) -> "TorsionLabel":
        return TorsionLabel(n * self.t, n * self.s, self.m)

    def is_zero(self) -> bool:
        return self.t == 0 and self.s == 0

    def point(self, shape: FiberShape) -> FiberPoint:
        return torsion_point(shape, self.m, self.t, self.s)

    def __str__(self) -> str:
        return f"M({self.t},{self.s})"


def _check_order(p: TorsionLabel, q: TorsionLabel) -> None:
    if p.m != q.m:
        msg = f"torsion labels of different orders: {p.m} and {q.m}"
        raise ShapeMismatchError(msg)


def torsion_label(point: FiberPoint, m: int) -> TorsionLabel:
    """Recover (t, s) from a point of order dividing m on I_{mk}."""
    shape = point.shape
    if m < 1 or shape.m % m:
        msg = f"{shape} has no full group of {m}-torsion points"
        raise TorsionShapeError(msg)
    k = shape.m // m
    t = root_exponent(point.coord, m)
    if point.component % k or t is None:
        msg = f"{point} is not an {m}-torsion point of {shape}"
        raise TorsionShapeError(msg)
    return TorsionLabel(t, point.component // k, m)


def weil_formula(p: TorsionLabel, q: TorsionLabel) -> CycloElem:
    """e_m(M(t1,s1), M(t2,s2)) = zeta_m^(t1 s2 - t2 s1)."""
    _check_order(p, q)
    return root_of_unity(p.m, p.t * q.s - q.t * p.s)


def pullback_divisor(q: FiberPoint, m: int) -> Divisor:
    """[m]^*(Q) - [m]^*(0) on the fiber of Q.

    Q must lie on a component divisible by m and have a root-of-unity coordinate
    zeta_N^a; its m-th roots zeta_{Nm}^(a + N i) sit on the m components j with
    m j = component(Q) mod mk.
    """
    shape = q.shape
    if shape.m % m:
        msg = f"{m} does not divide the component count of {shape}"
        raise TorsionShapeError(msg)
    root = as_root_of_unity(q.coord)
    if q.component % m or root is None:
        msg = f"[{m}]^* of {q} has no representable points"
        raise TorsionShapeError(msg)
    k = shape.m // m
    n, a = root
    base = q.component // m
    terms: list[tuple[FiberPoint, int]] = []
    for i in range(m):
        component = base + i * k
        for r in range(m):
            terms.append((FiberPoint(shape, component, root_of_unity(n * m, a + n * r)), 1))
            terms.append((FiberPoint(shape, i * k, root_of_unity(m, r)), -1))
    return Divisor(shape, terms)


def explicit_pullback_function(m: int, t: int) -> KElement:
    """The element g_j = zeta^(-jt) (u^m - zeta^t) / (u^m - 1) of K(I_m).

    Its divisor is [m]^*(tT) - [m]^*(0): the zeros are the m-th roots of zeta_m^t,
    the poles the m-th roots of unity, all on every component.
    """
    shape = FiberShape(m)
    zeros = [root_of_unity(m * m, t + m * i) for i in range(m)]
    poles = [root_of_unity(m, i) for i in range(m)]
    return KElement(
        shape,
        tuple(RationalFunc.create(root_of_unity(m, -j * t), 0, zeros, poles) for j in range(m)),
    )


class LimitWeilPairing:
    """Definitional evaluation of the limit Weil pairing.

    Every pairing reduces to the leaves e_m(P, T), one per torsion point, each
    evaluated once as g(X + P) / g(X) and cached together with its pullback
    function g and the value g(X).

    Args:
        evaluation_points: Rational coordinates tried, in order, for the generic
            point X on C_0; the next one is used when X or X + P meets div(g).
    """

    def __init__(
        self, evaluation_points: Sequence[int | Fraction] = DEFAULT_EVALUATION_POINTS
    ) -> None:
        if not evaluation_points:
            msg = "at least one evaluation point is required"
            raise ValueError(msg)
        self._points = tuple(CycloElem.rational(x) for x in evaluation_points)
        self._functions: dict[tuple[int, int, int], KElement] = {}
        self._base_values: dict[tuple[int, int, int, int], CycloElem] = {}
        self._leaves: dict[tuple[int, int, int, int, int], int] = {}

    @property
    def evaluation_points(self) -> tuple[CycloElem, ...]:
        return self._points

    def pullback_function(self, shape: FiberShape, m: int, t: int = 1) -> KElement:
        """g in K(shape) with div(g) = [m]^*(tT) - [m]^*(0).

        On I_m the closed-form element is used; on I_{mk}, k > 1, the Abel
        witness of the enumerated pullback divisor.
        """
        t %= m
        key = (shape.m, m, t)
        if key not in self._functions:
            if shape.m == m:
                g = explicit_pullback_function(m, t)
            else:
                g = abel_witness(pullback_divisor(torsion_point(shape, m, t, 0), m))
            self._functions[key] = g
        return self._functions[key]

    def _base_value(self, shape: FiberShape, m: int, t: int, index: int) -> CycloElem:
        key = (shape.m, m, t % m, index)
        if key not in self._base_values:
            g = self.pullback_function(shape, m, t)
            self._base_values[key] = evaluate(g.funcs[0], self._points[index])
        return self._base_values[key]

    def leaf(self, p: TorsionLabel, shape: FiberShape, t: int = 1) -> int:
        """The exponent of e_m(P, tT) = g(X + P) / g(X), g the pullback function of tT."""
        m = p.m
        key = (shape.m, m, p.t, p.s, t % m)
        if key in self._leaves:
            return self._leaves[key]
        g = self.pullback_function(shape, m, t)
        target = p.point(shape)
        for index, x in enumerate(self._points):
            moved = point_add(FiberPoint(shape, 0, x), target)
            try:
                value = evaluate(g.funcs[moved.component], moved.coord) / self._base_value(
                    shape, m, t, index
                )
            except EvaluationError:
                logger.debug("evaluation point %s collides with div(g) for %s; retrying", x, p)
                continue
            exponent = root_exponent(value, m)
            if exponent is None:
                msg = f"e_{m}({p}, {t}T) = {value} is not an {m}-th root of unity"
                raise InvariantViolation(msg)
            self._leaves[key] = exponent
            return exponent
        msg = f"every evaluation point collides with the divisor of g for {p} on {shape}"
        raise InvariantViolation(msg)

    def weil_definitional(self, p: TorsionLabel, q: TorsionLabel, shape: FiberShape) -> CycloElem:
        """The pairing from its definition.

        Only pairings whose second argument is a multiple of T can be evaluated
        directly; the rest reduce through bilinearity and the alternating property:

            e(P, Q) = e(P, T)^t2 * e(P, S)^s2,   e(P, S) = e(S, P)^-1 = e(S, T)^-t1
        """
        _check_order(p, q)
        m = p.m
        if shape.m % m:
            msg = f"{shape} has no full group of {m}-torsion points"
            raise TorsionShapeError(msg)
        exponent = q.t * self.leaf(p, shape) - p.t * q.s * self.leaf(TorsionLabel(0, 1, m), shape)
        return root_of_unity(m, exponent)


def weil_definitional(p: TorsionLabel, q: TorsionLabel, shape: FiberShape) -> CycloElem:
    """``LimitWeilPairing().weil_definitional`` with the default evaluation points."""
    return LimitWeilPairing().weil_definitional(p, q, shape)
