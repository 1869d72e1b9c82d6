"""Points and divisors on the smooth part of an I_m fiber.

The smooth part F^sm of a fiber of type I_m is identified with C^* x Z/m through
a standard set of affine coordinates: the pair ``(coord, j)`` is the point of
component C_j whose coordinate u_j equals ``coord``. Nodes (u_j = 0 or infinity)
are not points of F^sm and cannot be represented.
"""

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction

from torsion_sections.arith import CycloElem
from torsion_sections.errors import ShapeMismatchError


@dataclass(frozen=True)
class FiberShape:
    """A fiber of type I_m: a cycle of m rational curves (a nodal curve for m = 1)."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            msg = f"an I_m fiber needs m >= 1, got {self.m}"
            raise ValueError(msg)

    def __str__(self) -> str:
        return f"I_{self.m}"


@dataclass(frozen=True)
class FiberPoint:
    """The point of component C_component with coordinate ``coord``."""

    shape: FiberShape
    component: int
    coord: CycloElem

    def __post_init__(self) -> None:
        coord = self.coord
        if isinstance(coord, int | Fraction):
            coord = CycloElem.rational(coord)
        if coord.is_zero():
            msg = "points at the nodes (coordinate 0) are not on the smooth part"
            raise ValueError(msg)
        object.__setattr__(self, "coord", coord)
        object.__setattr__(self, "component", self.component % self.shape.m)

    def __str__(self) -> str:
        return f"({self.coord}, C_{self.component})"


def _check_shape(expected: FiberShape, actual: FiberShape) -> None:
    if expected != actual:
        msg = f"fiber shape mismatch: {expected} vs {actual}"
        raise ShapeMismatchError(msg)


class Divisor:
    """A finite Z-linear combination of points of F^sm.

    Immutable; zero multiplicities are never stored.
    """

    __slots__ = ("_shape", "_terms")

    def __init__(
        self,
        shape: FiberShape,
        terms: Mapping[FiberPoint, int] | Iterable[tuple[FiberPoint, int]] = (),
    ) -> None:
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[FiberPoint, int] = {}
        for point, mult in pairs:
            _check_shape(shape, point.shape)
            acc[point] = acc.get(point, 0) + mult
        self._shape = shape
        self._terms = {p: n for p, n in acc.items() if n}

    @classmethod
    def point(cls, point: FiberPoint, mult: int = 1) -> "Divisor":
        return cls(point.shape, [(point, mult)])

    @property
    def shape(self) -> FiberShape:
        return self._shape

    def items(self) -> Iterator[tuple[FiberPoint, int]]:
        return iter(self._terms.items())

    def support(self) -> list[FiberPoint]:
        return list(self._terms)

    def multiplicity(self, point: FiberPoint) -> int:
        return self._terms.get(point, 0)

    def on_component(self, j: int) -> "Divisor":
        """The part of the divisor supported on component C_j."""
        return Divisor(self._shape, [(p, n) for p, n in self._terms.items() if p.component == j])

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "Divisor") -> "Divisor":
        _check_shape(self._shape, other._shape)
        return Divisor(self._shape, [*self._terms.items(), *other._terms.items()])

    def __neg__(self) -> "Divisor":
        return Divisor(self._shape, [(p, -n) for p, n in self._terms.items()])

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __rmul__(self, k: int) -> "Divisor":
        return Divisor(self._shape, [(p, k * n) for p, n in self._terms.items()])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        return self._shape == other._shape and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._shape, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        body = " + ".join(f"{n}*{p}" for p, n in self.sorted_items())
        return f"Divisor({self._shape}: {body or '0'})"

    def sorted_items(self) -> list[tuple[FiberPoint, int]]:
        """Terms in a deterministic order: by component, then coordinate text."""
        return sorted(self._terms.items(), key=lambda t: (t[0].component, str(t[0].coord), t[1]))
