"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element of Q(zeta_N) is stored as its coefficient vector in the power basis
``1, zeta_N, ..., zeta_N^(phi(N)-1)``, i.e. a polynomial in zeta_N reduced modulo
the N-th cyclotomic polynomial. The reduced vector is canonical, so equality in
one field is coefficient equality. Elements of different orders are compared and
combined after embedding both into Q(zeta_L), L = lcm of the orders.

Orders are capped (``set_order_limit``, default 10000) so that a stray huge order
fails loudly instead of spending minutes building Phi_N.
"""

import logging
import operator
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Literal

import sympy

from torsion_sections.arith.polynomial import (
    cyclotomic_polynomial,
    euler_phi,
    poly_add,
    poly_inverse_mod,
    poly_mul,
)
from torsion_sections.errors import CycloZeroDivisionError, EmbeddingError, OrderLimitError

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 10_000

_order_limit = DEFAULT_MAX_ORDER

Rational = int | Fraction
ArithOp = Literal["add", "sub", "mul", "div"]


def set_order_limit(limit: int) -> None:
    """Set the largest cyclotomic order any element may have."""
    global _order_limit
    if limit < 1:
        msg = f"order limit must be positive, got {limit}"
        raise ValueError(msg)
    _order_limit = limit


def get_order_limit() -> int:
    return _order_limit


def _check_order(n: int) -> None:
    if n < 1:
        msg = f"cyclotomic order must be >= 1, got {n}"
        raise ValueError(msg)
    if n > _order_limit:
        logger.warning("Cyclotomic order %d exceeds the configured cap %d", n, _order_limit)
        msg = (
            f"cyclotomic order {n} exceeds the limit {_order_limit}"
            " (set TORSION_MAX_ORDER to raise it)"
        )
        raise OrderLimitError(msg)


def _reduce(coeffs: Sequence[Fraction | int], n: int) -> tuple[Fraction, ...]:
    """Reduce a polynomial in zeta_n to its canonical length-phi(n) vector."""
    folded = [Fraction(0)] * n
    for i, c in enumerate(coeffs):
        if c:
            folded[i % n] += c
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    # Phi_n is monic, so each step only subtracts integer multiples.
    for i in range(n - 1, d - 1, -1):
        c = folded[i]
        if c:
            folded[i] = Fraction(0)
            for j in range(d):
                if phi[j]:
                    folded[i - d + j] -= c * phi[j]
    return tuple(folded[:d])


@lru_cache(maxsize=4096)
def _monomial(n: int, k: int) -> tuple[Fraction, ...]:
    return _reduce([0] * (k % n) + [1], n)


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    factors = sympy.factorint(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


@lru_cache(maxsize=None)
def _normalized_traces(n: int) -> tuple[Fraction, ...]:
    """Tr(zeta_n^i) / phi(n) for the basis exponents i.

    The normalized trace does not depend on the ambient field, which makes it a
    hash that agrees with cross-order equality.
    """
    traces = []
    for i in range(euler_phi(n)):
        q = n // gcd(i, n)
        traces.append(Fraction(_mobius(q), euler_phi(q)))
    return tuple(traces)


@dataclass(frozen=True, eq=False)
class CycloElem:
    """An element of Q(zeta_order) in canonical reduced form.

    Build instances with ``CycloElem.from_poly``, ``CycloElem.rational`` or
    ``root_of_unity`` rather than passing an unreduced vector directly.
    """

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        _check_order(self.order)
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != euler_phi(self.order):
            msg = (
                f"Q(zeta_{self.order}) elements need {euler_phi(self.order)} coefficients, "
                f"got {len(coeffs)}"
            )
            raise ValueError(msg)
        object.__setattr__(self, "coeffs", coeffs)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_poly(cls, order: int, poly: Sequence[Fraction | int]) -> "CycloElem":
        """Element given by an arbitrary polynomial in zeta_order."""
        _check_order(order)
        return cls(order, _reduce(poly, order))

    @classmethod
    def rational(cls, value: Rational, order: int = 1) -> "CycloElem":
        return cls.from_poly(order, [Fraction(value)])

    @classmethod
    def zero(cls, order: int = 1) -> "CycloElem":
        return cls.rational(0, order)

    @classmethod
    def one(cls, order: int = 1) -> "CycloElem":
        return cls.rational(1, order)

    # ------------------------------------------------------------------
    # Predicates
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction | None:
        """The rational value, or None if the element is irrational."""
        if not self.is_rational():
            return None
        return self.coeffs[0]

    # ------------------------------------------------------------------
    # Field operations
    # ------------------------------------------------------------------

    def _coerce(self, other: object) -> "CycloElem | None":
        if isinstance(other, CycloElem):
            return other
        if isinstance(other, int | Fraction):
            return CycloElem.rational(other, self.order)
        return None

    def _binary(
        self, other: object, op: Callable[["CycloElem", "CycloElem"], "CycloElem"]
    ) -> "CycloElem":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        lhs, rhs = _align(self, rhs)
        return op(lhs, rhs)

    def __add__(self, other: object) -> "CycloElem":
        return self._binary(
            other, lambda a, b: CycloElem(a.order, _reduce(poly_add(a.coeffs, b.coeffs), a.order))
        )

    def __radd__(self, other: object) -> "CycloElem":
        return self.__add__(other)

    def __neg__(self) -> "CycloElem":
        return CycloElem(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> "CycloElem":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "CycloElem":
        return (-self) + other

    def __mul__(self, other: object) -> "CycloElem":
        return self._binary(
            other, lambda a, b: CycloElem(a.order, _reduce(poly_mul(a.coeffs, b.coeffs), a.order))
        )

    def __rmul__(self, other: object) -> "CycloElem":
        return self.__mul__(other)

    def inverse(self) -> "CycloElem":
        """Multiplicative inverse via extended Euclid against Phi_order."""
        if self.is_zero():
            msg = f"division by zero in Q(zeta_{self.order})"
            raise CycloZeroDivisionError(msg)
        if self.is_rational():
            return CycloElem.rational(1 / self.coeffs[0], self.order)
        inv = poly_inverse_mod(self.coeffs, cyclotomic_polynomial(self.order))
        return CycloElem.from_poly(self.order, inv)

    def __truediv__(self, other: object) -> "CycloElem":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other: object) -> "CycloElem":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs * self.inverse()

    def __pow__(self, exponent: int) -> "CycloElem":
        base = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        result = CycloElem.one(self.order)
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # ------------------------------------------------------------------
    # Equality and hashing
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if rhs.order == self.order:
            return self.coeffs == rhs.coeffs
        a, b = _align(self, rhs)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        traces = _normalized_traces(self.order)
        return hash(sum((c * t for c, t in zip(self.coeffs, traces, strict=True)), Fraction(0)))

    # ------------------------------------------------------------------
    # Display
    # ------------------------------------------------------------------

    def __str__(self) -> str:
        value = self.as_fraction()
        if value is not None:
            return str(value)
        root = as_root_of_unity(self)
        if root is not None:
            return f"zeta_{root[0]}^{root[1]}"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                power = f"zeta_{self.order}" + (f"^{i}" if i > 1 else "")
                terms.append(power if c == 1 else f"({c})*{power}")
        return " + ".join(terms)


def _align(x: CycloElem, y: CycloElem) -> tuple[CycloElem, CycloElem]:
    if x.order == y.order:
        return x, y
    n = lcm(x.order, y.order)
    return embed(x, n), embed(y, n)


def embed(x: CycloElem, m: int) -> CycloElem:
    """Represent ``x`` in Q(zeta_m); requires ``x.order`` to divide ``m``.

    zeta_order maps to zeta_m^(m/order).
    """
    if m % x.order:
        msg = f"cannot embed Q(zeta_{x.order}) into Q(zeta_{m}): {x.order} does not divide {m}"
        raise EmbeddingError(msg)
    if m == x.order:
        return x
    _check_order(m)
    scale = m // x.order
    poly = [Fraction(0)] * (scale * (len(x.coeffs) - 1) + 1)
    for i, c in enumerate(x.coeffs):
        poly[i * scale] = c
    return CycloElem.from_poly(m, poly)


def root_of_unity(n: int, k: int) -> CycloElem:
    """zeta_n^k in canonical reduced form."""
    _check_order(n)
    return CycloElem(n, _monomial(n, k % n))


_OPS: dict[str, Callable[[CycloElem, CycloElem], CycloElem]] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def arith(x: CycloElem, y: CycloElem, op: ArithOp) -> CycloElem:
    """Exact field arithmetic after embedding both operands into the lcm order."""
    return _OPS[op](x, y)


def _canonical_root(n: int, k: int) -> tuple[int, int]:
    k %= n
    g = gcd(n, k)
    return n // g, k // g


def as_root_of_unity(x: CycloElem) -> tuple[int, int] | None:
    """``(N, k)`` with ``x == zeta_N^k``, N the exact multiplicative order, or None.

    The roots of unity in Q(zeta_n) are the monomials +-zeta_n^k, and a monomial
    has integer coefficients after reduction, so anything else is rejected early.
    """
    if any(c.denominator != 1 for c in x.coeffs):
        return None
    n = x.order
    negated = tuple(-c for c in x.coeffs)
    for k in range(n):
        mono = _monomial(n, k)
        if x.coeffs == mono:
            return _canonical_root(n, k)
        if n % 2 and negated == mono:
            # -zeta_n^k = zeta_{2n}^{2k+n} for odd n
            return _canonical_root(2 * n, 2 * k + n)
    return None


def root_exponent(x: CycloElem, m: int) -> int | None:
    """The k in [0, m) with ``x == zeta_m^k``, or None if x is not an m-th root of unity."""
    root = as_root_of_unity(x)
    if root is None or m % root[0]:
        return None
    n, k = root
    return k * (m // n) % m


def format_root(x: CycloElem, m: int) -> str:
    """Render an m-th root of unity as ``zeta_m^k``; other values fall back to ``str``."""
    k = root_exponent(x, m)
    if k is None:
        return str(x)
    return f"zeta_{m}^{k}"
