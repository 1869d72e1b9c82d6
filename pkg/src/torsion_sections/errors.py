"""Exception hierarchy for torsion-sections.

Every error raised by the library derives from ``TorsionError``. Errors caused by
bad input values also derive from ``ValueError`` so callers may catch either.
``InvariantViolation`` is reserved for identities that must hold by theory; the
CLI maps it to exit code 3.
"""

from dataclasses import dataclass


class TorsionError(Exception):
    """Base class for all library errors."""


class OrderLimitError(TorsionError, ValueError):
    """A cyclotomic order exceeds the configured cap."""


class EmbeddingError(TorsionError, ValueError):
    """An element cannot be embedded into the requested cyclotomic field."""


class CycloZeroDivisionError(TorsionError, ZeroDivisionError):
    """Division by the zero element of a cyclotomic field."""


class ShapeMismatchError(TorsionError, ValueError):
    """Two fiber objects live on fibers with different component counts."""


class TorsionShapeError(TorsionError, ValueError):
    """The torsion order does not divide the component count of the fiber."""


class TwistError(TorsionError, ValueError):
    """A coordinate twist by a value that is not an m-th root of unity."""


class EvaluationError(TorsionError, ValueError):
    """A rational function evaluated at zero or at one of its zeros or poles."""


@dataclass(frozen=True)
class ConditionViolation:
    """One failed membership condition of the function group.

    ``condition`` is ``"a"``, ``"b"`` or ``"c"``; ``index`` is the node j (between
    components j and j+1 mod m) for the local conditions and None for the global one.
    """

    condition: str
    index: int | None
    detail: str


class KConditionError(TorsionError, ValueError):
    """A tuple of rational functions fails the function-group conditions."""

    def __init__(self, violations: list[ConditionViolation]) -> None:
        self.violations = violations
        lines = [
            f"condition {v.condition}"
            + (f" at node {v.index}/{v.index + 1}" if v.index is not None else "")
            + f": {v.detail}"
            for v in violations
        ]
        super().__init__("; ".join(lines))


class NotPrincipalError(TorsionError, ValueError):
    """A divisor is not the divisor of any function-group element."""


class NonInvertibleError(TorsionError, ValueError):
    """An integer has no inverse modulo the requested modulus."""


class InvalidPrimeError(TorsionError, ValueError):
    """The level is not a prime accepted by the modular-surface machinery."""


class ZeroSectionError(TorsionError, ValueError):
    """A quantity that is undefined for the zero section was requested for it."""


class InvariantViolation(TorsionError):
    """An identity that holds by theory failed. Never expected."""


class CodecError(TorsionError, ValueError):
    """Serialized input does not match the expected schema."""
