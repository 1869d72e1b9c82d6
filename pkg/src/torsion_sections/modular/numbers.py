"""Component numbers and root-of-unity numbers of the sections T_alpha.

At the I_1 cusp r/p the section T_alpha meets the (single) component at the
coordinate zeta_p^(alpha r^-1); at the I_p cusp 1/s it meets component alpha s.
Both are defined up to the orientation of the fiber, so the public values are
classes in G(p). The raw integers, with the orientation fixed by the formulas
above, are exposed as ``*_index`` helpers.
"""

from torsion_sections.arith import CycloElem, root_of_unity
from torsion_sections.data import FiberKind
from torsion_sections.errors import ZeroSectionError
from torsion_sections.fiber import FiberPoint, FiberShape, identity
from torsion_sections.modular.cusps import CuspData, GpClass, SectionId, check_prime


def _alpha(alpha: int | SectionId, p: int) -> int:
    return alpha.alpha if isinstance(alpha, SectionId) else alpha % p


def root_of_unity_index(p: int, alpha: int | SectionId, r: int) -> int:
    """alpha * r^-1 mod p."""
    check_prime(p)
    a = _alpha(alpha, p)
    if a == 0:
        msg = "the zero section has no root-of-unity number"
        raise ZeroSectionError(msg)
    return a * pow(r, -1, p) % p


def root_of_unity_number(p: int, alpha: int | SectionId, r: int) -> GpClass:
    """l_r(T_alpha) as a class in G(p)."""
    return GpClass(root_of_unity_index(p, alpha, r), p)


def component_index(p: int, alpha: int | SectionId, cusp: CuspData) -> int:
    """The component of the fiber over ``cusp`` met by T_alpha: alpha s mod p, or 0 on I_1."""
    check_prime(p)
    if cusp.kind is FiberKind.I1:
        return 0
    return _alpha(alpha, p) * cusp.index % p


def component_number(p: int, alpha: int | SectionId, cusp: CuspData) -> GpClass | None:
    """k(T_alpha) at ``cusp`` as a class in G(p); None marks component 0."""
    k = component_index(p, alpha, cusp)
    return GpClass(k, p) if k else None


def section_fiber_point(p: int, alpha: int | SectionId, cusp: CuspData) -> FiberPoint:
    """The point where T_alpha meets the smooth part of the fiber over ``cusp``.

    Over r/p this is (zeta_p^l, C_0) on I_1; over 1/s it is (1, C_k) on I_p. Both
    have order dividing p in the fiber group.
    """
    check_prime(p)
    shape = FiberShape(cusp.weight)
    if _alpha(alpha, p) == 0:
        return identity(shape)
    if cusp.kind is FiberKind.I1:
        return FiberPoint(shape, 0, root_of_unity(p, root_of_unity_index(p, alpha, cusp.index)))
    return FiberPoint(shape, component_index(p, alpha, cusp), CycloElem.one())
