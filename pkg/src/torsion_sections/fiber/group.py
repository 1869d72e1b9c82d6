"""Group law on F^sm = C^* x Z/m, torsion points, and the summation map Phi."""

from torsion_sections.arith import CycloElem, root_of_unity
from torsion_sections.errors import ShapeMismatchError, TorsionShapeError, TwistError
from torsion_sections.fiber.models import Divisor, FiberPoint, FiberShape


def identity(shape: FiberShape) -> FiberPoint:
    """The origin: coordinate 1 on C_0, where the zero section meets the fiber."""
    return FiberPoint(shape, 0, CycloElem.one())


def point_add(p: FiberPoint, q: FiberPoint) -> FiberPoint:
    if p.shape != q.shape:
        msg = f"cannot add points of {p.shape} and {q.shape}"
        raise ShapeMismatchError(msg)
    return FiberPoint(p.shape, p.component + q.component, p.coord * q.coord)


def point_neg(p: FiberPoint) -> FiberPoint:
    return FiberPoint(p.shape, -p.component, p.coord.inverse())


def point_multiple(n: int, p: FiberPoint) -> FiberPoint:
    """[n]P = (coord^n, n*component mod m)."""
    return FiberPoint(p.shape, n * p.component, p.coord**n)


def torsion_point(shape: FiberShape, m: int, t: int, s: int) -> FiberPoint:
    """M(t, s) = tT + sS on I_{mk}: coordinate zeta_m^t on component s*k."""
    if m < 1 or shape.m % m:
        msg = f"{shape} has no full group of {m}-torsion points: {m} does not divide {shape.m}"
        raise TorsionShapeError(msg)
    k = shape.m // m
    return FiberPoint(shape, (s % m) * k, root_of_unity(m, t))


def torsion_points(shape: FiberShape, m: int) -> list[FiberPoint]:
    """All m^2 points of order dividing m, ordered by t then s."""
    return [torsion_point(shape, m, t, s) for t in range(m) for s in range(m)]


def divisor_degree(d: Divisor) -> int:
    return sum(n for _, n in d.items())


def divisor_sum(d: Divisor) -> FiberPoint:
    """Phi(D): the actual sum in F^sm of the points of D, with multiplicity."""
    total = identity(d.shape)
    for point, n in d.items():
        total = point_add(total, point_multiple(n, point))
    return total


def twist_coordinates(p: FiberPoint, zeta: CycloElem) -> FiberPoint:
    """Express ``p`` in the standard coordinates u_j' = zeta^j u_j.

    ``zeta`` must be an m-th root of unity, m the number of components; the m
    possible choices enumerate all standard coordinate sets.
    """
    if zeta ** p.shape.m != 1:
        msg = f"twist factor {zeta} is not a {p.shape.m}-th root of unity"
        raise TwistError(msg)
    return FiberPoint(p.shape, p.component, zeta**p.component * p.coord)
