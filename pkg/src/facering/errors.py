from .arith.fields import DomainError, UnluckySpecialization


class DegenerateCoordinates(DomainError):
    """A coordinate matrix is not a usable linear system of parameters
    (zero column, singular facet minor, vanishing volume element)."""


class CycleDegreeInconsistency(DomainError):
    """The facet values of a degree map do not extend to a linear functional on A^d."""


class FatalInconsistency(RuntimeError):
    """An invariant that must hold by construction failed."""


class ModeError(DomainError):
    """A check was requested in a coefficient mode where it is meaningless."""


__all__ = [
    "CycleDegreeInconsistency",
    "DegenerateCoordinates",
    "DomainError",
    "FatalInconsistency",
    "ModeError",
    "UnluckySpecialization",
]
