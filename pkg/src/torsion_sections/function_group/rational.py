"""Factored rational functions on one component of an I_m fiber.

A function is kept as

    g(u) = alpha * u^ell * prod_i (u - lambda_i) / prod_k (u - mu_k)

with alpha and every lambda_i, mu_k nonzero. Orders and leading coefficients at
the two nodes u = 0 and u = infinity are read straight off this form, so no root
finding is ever needed.
"""

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from torsion_sections.arith import CycloElem
from torsion_sections.errors import EvaluationError

Scalar = CycloElem | int | Fraction


def _as_cyclo(value: Scalar) -> CycloElem:
    return value if isinstance(value, CycloElem) else CycloElem.rational(value)


def _product(values: Iterable[CycloElem]) -> CycloElem:
    result = CycloElem.one()
    for v in values:
        result = result * v
    return result


@dataclass(frozen=True, eq=False)
class RationalFunc:
    """A nonzero rational function in factored, cancelled form.

    Use ``RationalFunc.create`` to build one from arbitrary zero and pole lists;
    the constructor itself rejects values that occur as both a zero and a pole.
    """

    alpha: CycloElem
    ell: int = 0
    zeros: tuple[CycloElem, ...] = ()
    poles: tuple[CycloElem, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", _as_cyclo(self.alpha))
        object.__setattr__(self, "zeros", tuple(_as_cyclo(z) for z in self.zeros))
        object.__setattr__(self, "poles", tuple(_as_cyclo(p) for p in self.poles))
        if self.alpha.is_zero():
            msg = "leading scalar alpha must be nonzero"
            raise ValueError(msg)
        if any(v.is_zero() for v in (*self.zeros, *self.poles)):
            msg = "zeros and poles must be nonzero; the node u = 0 belongs in ell"
            raise ValueError(msg)
        if Counter(self.zeros) & Counter(self.poles):
            msg = "a value occurs as both zero and pole; build with RationalFunc.create"
            raise ValueError(msg)

    @classmethod
    def create(
        cls,
        alpha: Scalar,
        ell: int = 0,
        zeros: Iterable[Scalar] = (),
        poles: Iterable[Scalar] = (),
    ) -> "RationalFunc":
        """Build a function, cancelling common zero/pole factors."""
        z = Counter(_as_cyclo(v) for v in zeros)
        p = Counter(_as_cyclo(v) for v in poles)
        common = z & p
        return cls(
            alpha=_as_cyclo(alpha),
            ell=ell,
            zeros=tuple((z - common).elements()),
            poles=tuple((p - common).elements()),
        )

    @classmethod
    def constant(cls, c: Scalar) -> "RationalFunc":
        return cls(alpha=_as_cyclo(c))

    @property
    def e(self) -> int:
        return len(self.zeros)

    @property
    def f(self) -> int:
        return len(self.poles)

    def is_constant(self) -> bool:
        return self.ell == 0 and not self.zeros and not self.poles

    def __mul__(self, other: "RationalFunc") -> "RationalFunc":
        return RationalFunc.create(
            self.alpha * other.alpha,
            self.ell + other.ell,
            (*self.zeros, *other.zeros),
            (*self.poles, *other.poles),
        )

    def inverse(self) -> "RationalFunc":
        return RationalFunc(self.alpha.inverse(), -self.ell, self.poles, self.zeros)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFunc):
            return NotImplemented
        return (
            self.alpha == other.alpha
            and self.ell == other.ell
            and Counter(self.zeros) == Counter(other.zeros)
            and Counter(self.poles) == Counter(other.poles)
        )

    def __hash__(self) -> int:
        return hash(
            (
                self.alpha,
                self.ell,
                frozenset(Counter(self.zeros).items()),
                frozenset(Counter(self.poles).items()),
            )
        )

    def __str__(self) -> str:
        parts = [f"{self.alpha}"]
        if self.ell:
            parts.append(f"u^{self.ell}")
        parts.extend(f"(u - {z})" for z in self.zeros)
        text = " * ".join(parts)
        if self.poles:
            text += " / " + " * ".join(f"(u - {p})" for p in self.poles)
        return text


def n0(g: RationalFunc) -> int:
    """Order of g at u = 0."""
    return g.ell


def n_inf(g: RationalFunc) -> int:
    """Order of g at u = infinity: f - e - ell."""
    return g.f - g.e - g.ell


def c0(g: RationalFunc) -> CycloElem:
    """Leading Laurent coefficient at u = 0: alpha (-1)^(e+f) prod lambda / prod mu."""
    sign = -1 if (g.e + g.f) % 2 else 1
    return g.alpha * sign * _product(g.zeros) / _product(g.poles)


def c_inf(g: RationalFunc) -> CycloElem:
    """Leading Laurent coefficient at u = infinity."""
    return g.alpha


def evaluate(g: RationalFunc, u: Scalar) -> CycloElem:
    """Exact value of g at a point of the smooth part of its component."""
    x = _as_cyclo(u)
    if x.is_zero():
        msg = "cannot evaluate at u = 0 (a node)"
        raise EvaluationError(msg)
    if x in g.zeros or x in g.poles:
        msg = f"u = {x} is a zero or pole of {g}"
        raise EvaluationError(msg)
    numerator = g.alpha
    denominator = CycloElem.one()
    for lam in g.zeros:
        numerator = numerator * (x - lam)
    for mu in g.poles:
        denominator = denominator * (x - mu)
    if g.ell >= 0:
        numerator = numerator * x**g.ell
    else:
        denominator = denominator * x ** (-g.ell)
    return numerator / denominator
