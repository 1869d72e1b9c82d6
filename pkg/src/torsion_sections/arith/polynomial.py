"""Dense univariate polynomials over Q.

A polynomial is a tuple of coefficients, lowest degree first:
``(1, 0, 5)`` is ``1 + 5x**2``. Trailing zeros are stripped by ``normalize``,
so the zero polynomial is ``()``. Coefficients are ``Fraction``; integer
polynomials (the cyclotomic moduli) use plain ``int``.
"""

from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache

import sympy

Poly = tuple[Fraction, ...]


def normalize(p: Sequence[Fraction | int]) -> Poly:
    """Strip trailing zero coefficients."""
    n = len(p)
    while n and not p[n - 1]:
        n -= 1
    return tuple(Fraction(c) for c in p[:n])


def degree(p: Sequence[Fraction | int]) -> int:
    """Degree of a normalized polynomial; -1 for the zero polynomial."""
    return len(p) - 1


def poly_add(a: Sequence[Fraction | int], b: Sequence[Fraction | int]) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    res = [Fraction(c) for c in a]
    for i, c in enumerate(b):
        res[i] += c
    return normalize(res)


def poly_sub(a: Sequence[Fraction | int], b: Sequence[Fraction | int]) -> Poly:
    return poly_add(a, [-c for c in b])


def poly_scale(a: Sequence[Fraction | int], c: Fraction | int) -> Poly:
    return normalize([c * x for x in a])


def poly_mul(a: Sequence[Fraction | int], b: Sequence[Fraction | int]) -> Poly:
    if not a or not b:
        return ()
    res = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            res[i + j] += x * y
    return normalize(res)


def poly_divmod(a: Sequence[Fraction | int], b: Sequence[Fraction | int]) -> tuple[Poly, Poly]:
    """Euclidean division over Q: returns ``(q, r)`` with ``a = q*b + r``, deg r < deg b."""
    b = normalize(b)
    if not b:
        msg = "polynomial division by zero"
        raise ZeroDivisionError(msg)
    rem = list(normalize(a))
    db = len(b) - 1
    lead = b[-1]
    if len(rem) - 1 < db:
        return (), tuple(rem)
    quot = [Fraction(0)] * (len(rem) - db)
    for i in range(len(rem) - 1 - db, -1, -1):
        c = rem[i + db] / lead
        quot[i] = c
        if c:
            for j in range(db + 1):
                rem[i + j] -= c * b[j]
    return normalize(quot), normalize(rem[:db])


def poly_xgcd(a: Sequence[Fraction | int], b: Sequence[Fraction | int]) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid over Q.

    Returns ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` the monic gcd
    (``g == ()`` only when both inputs are zero).
    """
    r0, r1 = normalize(a), normalize(b)
    s0: Poly = (Fraction(1),)
    s1: Poly = ()
    t0: Poly = ()
    t1: Poly = (Fraction(1),)
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1))
    if not r0:
        return (), (), ()
    inv_lead = 1 / r0[-1]
    return poly_scale(r0, inv_lead), poly_scale(s0, inv_lead), poly_scale(t0, inv_lead)


def poly_inverse_mod(a: Sequence[Fraction | int], modulus: Sequence[Fraction | int]) -> Poly:
    """Inverse of ``a`` modulo ``modulus``.

    Raises:
        ZeroDivisionError: If ``a`` and ``modulus`` are not coprime.
    """
    _, rem = poly_divmod(a, modulus)
    g, s, _ = poly_xgcd(rem, modulus)
    if g != (Fraction(1),):
        msg = "polynomial is not invertible modulo the given modulus"
        raise ZeroDivisionError(msg)
    return s


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """The n-th cyclotomic polynomial, by ``(x^n - 1) / prod_{d | n, d < n} Phi_d``.

    Memoized; ``lru_cache`` is safe under concurrent callers.
    """
    if n < 1:
        msg = f"cyclotomic polynomial needs n >= 1, got {n}"
        raise ValueError(msg)
    numerator: Poly = normalize([-1] + [0] * (n - 1) + [1])
    denominator: Poly = (Fraction(1),)
    for d in sympy.divisors(n):
        if d < n:
            denominator = poly_mul(denominator, cyclotomic_polynomial(int(d)))
    quotient, rem = poly_divmod(numerator, denominator)
    if rem:
        msg = f"x^{n} - 1 is not divisible by the lower cyclotomic factors"
        raise ArithmeticError(msg)
    return tuple(int(c) for c in quotient)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return int(sympy.totient(n))
