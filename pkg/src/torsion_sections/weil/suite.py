"""Exhaustive verification of the limit Weil pairing on one fiber."""

import logging
from itertools import product

from torsion_sections.arith import format_root, root_exponent, root_of_unity
from torsion_sections.data import SuiteReport
from torsion_sections.fiber import FiberShape, twist_coordinates
from torsion_sections.weil.pairing import (
    LimitWeilPairing,
    TorsionLabel,
    torsion_label,
    weil_formula,
)

logger = logging.getLogger(__name__)

_MAX_LISTED = 3


def _record(report: SuiteReport, name: str, total: int, failures: list[str]) -> None:
    if failures:
        shown = "; ".join(failures[:_MAX_LISTED])
        report.add(name, False, f"{len(failures)} of {total} failed: {shown}")
    else:
        report.add(name, True, f"{total} cases")


def weil_bilinearity_suite(
    m: int, shape: FiberShape, pairing: LimitWeilPairing | None = None
) -> SuiteReport:
    """Check every pairing identity over all m^4 ordered pairs of m-torsion points.

    The definitional value of each pair is compared against the closed formula,
    then the table of definitional values is checked for mu_m-valuedness, the
    alternating property, skew-symmetry, bilinearity in each argument,
    non-degeneracy, and invariance under the mk standard coordinate twists.
    """
    pairing = pairing or LimitWeilPairing()
    labels = [TorsionLabel(t, s, m) for t in range(m) for s in range(m)]
    report = SuiteReport("weil", {"m": m, "k": shape.m // m, "fiber": str(shape)})

    exponents: dict[tuple[TorsionLabel, TorsionLabel], int | None] = {}
    mismatches: list[str] = []
    for p, q in product(labels, repeat=2):
        value = pairing.weil_definitional(p, q, shape)
        expected = weil_formula(p, q)
        exponents[p, q] = root_exponent(value, m)
        if value != expected:
            mismatches.append(
                f"e({p}, {q}) = {format_root(value, m)}, formula {format_root(expected, m)}"
            )
    pairs = len(exponents)
    _record(report, "definitional equals formula", pairs, mismatches)
    _record(
        report,
        "values are m-th roots of unity",
        pairs,
        [f"e({p}, {q})" for (p, q), e in exponents.items() if e is None],
    )
    if any(e is None for e in exponents.values()):
        return report
    table = {key: e for key, e in exponents.items() if e is not None}

    _record(
        report,
        "alternating",
        len(labels),
        [f"e({p}, {p}) = zeta^{table[p, p]}" for p in labels if table[p, p]],
    )
    _record(
        report,
        "skew-symmetric",
        pairs,
        [f"e({p}, {q}) e({q}, {p}) != 1" for p, q in table if (table[p, q] + table[q, p]) % m],
    )

    left: list[str] = []
    right: list[str] = []
    for p, p2, q in product(labels, repeat=3):
        if (table[p + p2, q] - table[p, q] - table[p2, q]) % m:
            left.append(f"({p} + {p2}, {q})")
        if (table[q, p + p2] - table[q, p] - table[q, p2]) % m:
            right.append(f"({q}, {p} + {p2})")
    _record(report, "bilinear in the first argument", len(labels) ** 3, left)
    _record(report, "bilinear in the second argument", len(labels) ** 3, right)

    _record(
        report,
        "non-degenerate",
        len(labels) - 1,
        [str(p) for p in labels if not p.is_zero() and not any(table[p, q] for q in labels)],
    )

    twist_failures: list[str] = []
    for a in range(shape.m):
        zeta = root_of_unity(shape.m, a)
        relabel = {
            p: torsion_label(twist_coordinates(p.point(shape), zeta), m) for p in labels
        }
        for p, q in product(labels, repeat=2):
            if table[relabel[p], relabel[q]] != table[p, q]:
                twist_failures.append(f"twist {a}: e({p}, {q})")
    _record(report, "independent of the standard coordinates", shape.m * pairs, twist_failures)

    logger.info("%s [m=%d, %s]", report.summary(), m, shape)
    return report
