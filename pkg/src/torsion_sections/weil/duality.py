"""The set W* of local sections pairing with W to a fixed root of unity."""

from math import gcd

from torsion_sections.arith import CycloElem, root_exponent
from torsion_sections.errors import NonInvertibleError
from torsion_sections.weil.pairing import TorsionLabel, weil_formula


def w_star(a: int, m: int) -> int:
    """The b in [0, m) with a*b = 1 mod m.

    For W = aT (component number 0, root-of-unity number a) every Z with
    e_m(W, Z) = zeta_m passes through component b.
    """
    if m < 1 or gcd(a, m) != 1:
        msg = f"{a} is not invertible modulo {m}"
        raise NonInvertibleError(msg)
    return pow(a, -1, m)


def pairing_preimage(w: TorsionLabel, value: CycloElem) -> list[TorsionLabel]:
    """All Z of order dividing m with e_m(W, Z) = value, ordered by (t, s)."""
    m = w.m
    target = root_exponent(value, m)
    if target is None:
        return []
    preimage = []
    for t in range(m):
        for s in range(m):
            z = TorsionLabel(t, s, m)
            if root_exponent(weil_formula(w, z), m) == target:
                preimage.append(z)
    return preimage
