"""Verification suites and the runner behind the ``verify`` command.

Every suite recomputes both sides of an identity (table against closed form,
definitional against formula, formula table against fiber-point counting) and
records one check per comparison in a ``SuiteReport``.
"""

import logging
import time
from collections.abc import Callable
from functools import partial
from math import gcd

from torsion_sections.arith import root_of_unity
from torsion_sections.config.models import SweepConfig
from torsion_sections.data import SuiteReport
from torsion_sections.errors import KConditionError
from torsion_sections.fiber import FiberShape
from torsion_sections.function_group import (
    abel_check,
    div_map,
    order_m_point_divisor,
    order_m_point_element,
)
from torsion_sections.modular import (
    component_numbers_additive,
    duality_check,
    is_latin_square,
    m_fraction,
    m_fraction_closed_form,
    m_fractions_by_counting,
    quotient_component_numbers,
    r_fraction,
    r_fraction_closed_form,
    r_fractions_by_counting,
    root_of_unity_number,
    sections_disjoint,
    weil_cross_check,
    z_matrix,
)
from torsion_sections.modular.cusps import half
from torsion_sections.modular.equidistribution import SMALL_PRIMES
from torsion_sections.run_logger import RunLogger
from torsion_sections.weil import LimitWeilPairing, weil_bilinearity_suite

logger = logging.getLogger(__name__)


def equidist_report(p: int, alpha: int) -> SuiteReport:
    """M_i and R_i for T_alpha against the closed forms and the counting path."""
    report = SuiteReport("equidistribution", {"p": p, "alpha": alpha})
    if p in SMALL_PRIMES:
        value = r_fraction(p, alpha, 1)
        report.add("R_1 closed form", value == r_fraction_closed_form(p), f"R_1 = {value}")
        return report

    counted_m = m_fractions_by_counting(p, alpha)
    for i in range(half(p) + 1):
        value = m_fraction(p, alpha, i)
        expected = m_fraction_closed_form(p, i)
        report.add(f"M_{i} closed form", value == expected, f"{value} vs {expected}")
        report.add(f"M_{i} by counting", value == counted_m[i], f"{value} vs {counted_m[i]}")

    counted_r = r_fractions_by_counting(p, alpha)
    expected_r = r_fraction_closed_form(p)
    for i in range(1, half(p) + 1):
        value = r_fraction(p, alpha, i)
        report.add(f"R_{i} closed form", value == expected_r, f"{value} vs {expected_r}")
        report.add(f"R_{i} by counting", value == counted_r[i], f"{value} vs {counted_r[i]}")
    return report


def zmatrix_report(p: int) -> SuiteReport:
    report = SuiteReport("z matrix", {"p": p})
    matrix = z_matrix(p)
    report.add("rows and columns are permutations", is_latin_square(matrix))
    report.add(
        "diagonal is the identity class",
        all(matrix[i][i].rep == 1 for i in range(len(matrix))),
    )
    return report


def section_structure_report(p: int) -> SuiteReport:
    """Disjointness of torsion sections, additivity of k, and the quotient table."""
    report = SuiteReport("sections", {"p": p})
    report.add("torsion sections never meet", sections_disjoint(p))
    report.add("component numbers are additive", component_numbers_additive(p))
    for alpha in range(1, p):
        rows = quotient_component_numbers(p, alpha)
        inverse_ok = all(
            row.k is None or row.k == root_of_unity_number(p, alpha, row.cusp.index).inverse()
            for row in rows
        )
        report.add(f"quotient k(T'_{alpha}) = l(T_{alpha})^-1", inverse_ok)
    return report


def worked_example_report(m: int, k: int) -> SuiteReport:
    """Both explicit function-group elements of an order-m point, for every alpha and zeta."""
    report = SuiteReport("worked example", {"m": m, "k": k})
    for a in range(1, m):
        if gcd(a, m) != 1:
            continue
        zeta = root_of_unity(m, a)
        for alpha in range(m):
            name = f"alpha={alpha}, zeta=zeta_{m}^{a}"
            try:
                g = order_m_point_element(m, k, alpha, zeta)
            except KConditionError as exc:
                report.add(f"{name} lies in K", False, str(exc))
                continue
            d = order_m_point_divisor(m, k, alpha, zeta)
            report.add(f"{name} has divisor m p - m 0", div_map(g) == d)
            report.add(f"{name} divisor is principal", abel_check(d))
    return report


class VerificationRunner:
    """Runs every verification sweep over the configured parameter ranges.

    Args:
        sweep: Primes, Weil orders and base-change degrees to cover.
        pairing: Definitional Weil pairing evaluator (its caches are shared).
        run_logger: Optional RunLogger receiving one record per suite.
    """

    def __init__(
        self,
        sweep: SweepConfig,
        pairing: LimitWeilPairing,
        *,
        run_logger: RunLogger | None = None,
    ) -> None:
        self._sweep = sweep
        self._pairing = pairing
        self._run_logger = run_logger

    def _timed(self, build: Callable[[], SuiteReport]) -> SuiteReport:
        t0 = time.monotonic()
        report = build()
        duration = time.monotonic() - t0
        logger.info("%s %s (%.2fs)", report.summary(), report.params, duration)
        if self._run_logger:
            self._run_logger.log_report(report, duration)
        return report

    def run(self) -> list[SuiteReport]:
        reports: list[SuiteReport] = []

        for p in SMALL_PRIMES:
            reports.append(self._timed(partial(equidist_report, p, 1)))

        for p in self._sweep.primes:
            for alpha in range(1, p):
                reports.append(self._timed(partial(equidist_report, p, alpha)))
            reports.append(self._timed(partial(zmatrix_report, p)))
            reports.append(self._timed(partial(duality_check, p)))
            reports.append(self._timed(partial(weil_cross_check, p)))
            reports.append(self._timed(partial(section_structure_report, p)))

        for m in self._sweep.weil_orders:
            for k in self._sweep.base_change:
                shape = FiberShape(m * k)
                reports.append(
                    self._timed(partial(weil_bilinearity_suite, m, shape, self._pairing))
                )
                reports.append(self._timed(partial(worked_example_report, m, k)))

        return reports
