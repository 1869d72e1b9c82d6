"""Duality between root-of-unity numbers and component numbers.

The canonical involution A of X_1(p) exchanges the I_1 cusp r/p with the I_p
cusp 1/r, and l_x(T) = k_{Ax}(T)^-1 in G(p). Both numbers scale by alpha on
T_alpha, so there the relation reads l_x(T_alpha) = alpha^2 k_{Ax}(T_alpha)^-1.
On the quotient fibration the fiber types swap, and the image T' of T has
k_x(T') = l_x(T)^-1.
"""

import logging
from dataclasses import dataclass

from torsion_sections.data import FiberKind, SuiteReport
from torsion_sections.modular.cusps import CuspData, GpClass, check_prime, cusps, involution
from torsion_sections.modular.numbers import (
    component_number,
    root_of_unity_index,
    root_of_unity_number,
)
from torsion_sections.weil import w_star

logger = logging.getLogger(__name__)


def duality_check(p: int, alpha: int = 1) -> SuiteReport:
    """Check l_x(T_alpha) = alpha^2 k_{Ax}(T_alpha)^-1 at every I_1 cusp x.

    For the universal section (alpha = 1) this is l_x = k_{Ax}^-1.
    """
    check_prime(p)
    report = SuiteReport("duality", {"p": p, "alpha": alpha})
    scale = GpClass(alpha * alpha, p)
    factor = "" if scale.rep == 1 else f"{scale} "
    for cusp in cusps(p):
        if cusp.kind is not FiberKind.I1:
            continue
        ell = root_of_unity_number(p, alpha, cusp.index)
        image = involution(cusp)
        k = component_number(p, alpha, image)
        passed = k is not None and ell == scale * k.inverse()
        report.add(
            f"l at {cusp.rep} = {factor}k at {image.rep} inverse",
            passed,
            f"l = {ell}, k = {k if k is not None else 0}",
        )
    logger.info("%s", report.summary())
    return report


@dataclass(frozen=True)
class QuotientRow:
    """A cusp of the quotient fibration and the component number of T' over it."""

    cusp: CuspData
    fiber: FiberKind
    k: GpClass | None

    @property
    def weight(self) -> int:
        return self.cusp.p if self.fiber is FiberKind.IP else 1


def quotient_component_numbers(p: int, alpha: int = 1) -> list[QuotientRow]:
    """Fiber types and k(T'_alpha) over every cusp of the quotient fibration.

    The fiber over r/p becomes I_p with k(T') = l_r(T_alpha)^-1; the fiber over
    1/s becomes I_1, where T' meets the only component.
    """
    check_prime(p)
    rows = []
    for cusp in cusps(p):
        if cusp.kind is FiberKind.I1:
            k = root_of_unity_number(p, alpha, cusp.index).inverse()
            rows.append(QuotientRow(cusp, FiberKind.IP, k))
        else:
            rows.append(QuotientRow(cusp, FiberKind.I1, None))
    return rows


def weil_cross_check(p: int) -> SuiteReport:
    """W* meets the quotient table: for a = l_r(T_alpha), w_star(a, p) lies in k_r(T'_alpha)."""
    check_prime(p)
    report = SuiteReport("weil cross-check", {"p": p})
    for alpha in range(1, p):
        table = {row.cusp: row.k for row in quotient_component_numbers(p, alpha)}
        for cusp, k in table.items():
            if cusp.kind is not FiberKind.I1:
                continue
            a = root_of_unity_index(p, alpha, cusp.index)
            b = w_star(a, p)
            report.add(
                f"alpha={alpha} at {cusp.rep}",
                k is not None and b in k,
                f"a = {a}, w* = {b}, class {k}",
            )
    logger.info("%s", report.summary())
    return report
