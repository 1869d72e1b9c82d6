"""Cusps of X_1(p) and the value group G(p) = (Z/p)^x / +-1.

The universal elliptic surface over X_1(p) has p - 1 singular fibers: type I_1
over the cusps r/p and type I_p over the cusps 1/s, for r, s = 1 .. (p-1)/2.
"""

from dataclasses import dataclass

from sympy import isprime

from torsion_sections.data import FiberKind
from torsion_sections.errors import InvalidPrimeError, NonInvertibleError


def check_prime(p: int) -> None:
    """Reject levels the cusp machinery does not handle: composites and p < 5."""
    if p < 5 or not isprime(p):
        msg = f"p must be a prime >= 5, got {p}"
        raise InvalidPrimeError(msg)


def half(p: int) -> int:
    """(p - 1) / 2, the number of classes in G(p) and of cusps of each kind."""
    return (p - 1) // 2


@dataclass(frozen=True)
class GpClass:
    """The class {rep, p - rep} in G(p), stored by its representative in [1, (p-1)/2]."""

    rep: int
    p: int

    def __post_init__(self) -> None:
        x = self.rep % self.p
        if x == 0:
            msg = f"0 is not a unit modulo {self.p}"
            raise NonInvertibleError(msg)
        object.__setattr__(self, "rep", min(x, self.p - x))

    def inverse(self) -> "GpClass":
        return GpClass(pow(self.rep, -1, self.p), self.p)

    def __mul__(self, other: "GpClass") -> "GpClass":
        return GpClass(self.rep * other.rep, self.p)

    def __contains__(self, x: int) -> bool:
        return x % self.p in (self.rep, self.p - self.rep)

    def __str__(self) -> str:
        return str(self.rep)


@dataclass(frozen=True)
class SectionId:
    """The torsion section T_alpha = alpha T; alpha = 0 is the zero section."""

    alpha: int
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", self.alpha % self.p)

    def is_zero(self) -> bool:
        return self.alpha == 0

    def __str__(self) -> str:
        return f"T_{self.alpha}"


@dataclass(frozen=True)
class CuspData:
    """A cusp of X_1(p) with the type and component count of its fiber."""

    kind: FiberKind
    index: int
    p: int

    @property
    def weight(self) -> int:
        return 1 if self.kind is FiberKind.I1 else self.p

    @property
    def rep(self) -> str:
        """The rational representative: r/p for I_1 cusps, 1/s for I_p cusps."""
        return f"{self.index}/{self.p}" if self.kind is FiberKind.I1 else f"1/{self.index}"

    def __str__(self) -> str:
        return f"{self.rep} ({self.kind})"


def cusps(p: int) -> list[CuspData]:
    """All p - 1 cusps, I_1 cusps first, each kind by increasing index."""
    check_prime(p)
    return [CuspData(kind, i, p) for kind in FiberKind for i in range(1, half(p) + 1)]


def total_weight(p: int) -> int:
    return sum(c.weight for c in cusps(p))


def involution(cusp: CuspData) -> CuspData:
    """The canonical involution: r/p goes to -1/r ~ 1/r, so I_1 index r <-> I_p index r."""
    other = FiberKind.IP if cusp.kind is FiberKind.I1 else FiberKind.I1
    return CuspData(other, cusp.index, cusp.p)
