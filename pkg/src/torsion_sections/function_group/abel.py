"""Abel's theorem on the smooth part of an I_m fiber.

A divisor D on F^sm is div(g) for some g in K exactly when deg(D) = 0 and
Phi(D) is the identity. ``abel_witness`` builds such a g constructively.
"""

import logging

from torsion_sections.arith import CycloElem
from torsion_sections.errors import InvariantViolation, KConditionError, NotPrincipalError
from torsion_sections.fiber import Divisor, divisor_degree, divisor_sum, identity
from torsion_sections.function_group.kgroup import KElement, div_map
from torsion_sections.function_group.rational import RationalFunc, c0

logger = logging.getLogger(__name__)


def abel_check(d: Divisor) -> bool:
    """True iff deg(D) = 0 and Phi(D) = 0."""
    return divisor_degree(d) == 0 and divisor_sum(d) == identity(d.shape)


def _split_by_component(d: Divisor) -> list[tuple[list[CycloElem], list[CycloElem]]]:
    parts: list[tuple[list[CycloElem], list[CycloElem]]] = [([], []) for _ in range(d.shape.m)]
    for point, mult in d.sorted_items():
        zeros, poles = parts[point.component]
        if mult > 0:
            zeros.extend([point.coord] * mult)
        else:
            poles.extend([point.coord] * -mult)
    return parts


def abel_witness(d: Divisor) -> KElement:
    """An element g of K with div(g) = D, normalized so that g_0 has leading scalar 1.

    The node orders follow from condition a by telescoping,
    ell_{j+1} = ell_j + e_j - f_j, and condition c fixes
    ell_0 = sum_j j (e_j - f_j) / m, an integer because the component part of
    Phi(D) vanishes. The scalars are chained through condition b,
    alpha_{j+1} = alpha_j / kappa_{j+1} with kappa_j = c_0 of the monic part of
    g_j; the last node closes because the C^* part of Phi(D) is 1.

    Raises:
        NotPrincipalError: If D fails ``abel_check``.
        InvariantViolation: If the constructed tuple is not a witness for D.
    """
    if not abel_check(d):
        msg = (
            f"divisor is not principal: degree {divisor_degree(d)}, "
            f"sum {divisor_sum(d)} (need 0 and {identity(d.shape)})"
        )
        raise NotPrincipalError(msg)

    m = d.shape.m
    parts = _split_by_component(d)
    deltas = [len(zeros) - len(poles) for zeros, poles in parts]

    weighted = sum(j * delta for j, delta in enumerate(deltas))
    if weighted % m:
        msg = f"sum of j*(e_j - f_j) = {weighted} is not divisible by {m}"
        raise InvariantViolation(msg)
    ells = [weighted // m]
    for delta in deltas[:-1]:
        ells.append(ells[-1] + delta)

    kappas = [c0(RationalFunc.create(1, 0, zeros, poles)) for zeros, poles in parts]
    alphas = [CycloElem.one()]
    for j in range(1, m):
        alphas.append(alphas[-1] / kappas[j])

    funcs = [
        RationalFunc.create(alpha, ell, zeros, poles)
        for alpha, ell, (zeros, poles) in zip(alphas, ells, parts, strict=True)
    ]
    try:
        witness = KElement(d.shape, tuple(funcs))
    except KConditionError as exc:
        msg = f"constructed tuple left K: {exc}"
        raise InvariantViolation(msg) from exc
    if div_map(witness) != d:
        msg = f"witness divisor {div_map(witness)!r} differs from {d!r}"
        raise InvariantViolation(msg)
    logger.debug("abel witness on %s: ell = %s", d.shape, ells)
    return witness
