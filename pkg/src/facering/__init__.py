"""Artinian reductions of face rings and certificates for their Lefschetz,
duality and anisotropy properties on small complexes."""

from .algebra import ArtinianAlgebra, CoordMatrix, GorensteinAlgebra, degree_functional, gorensteinify
from .arith import BinaryField, PrimeField, RationalFunctionField, default_field
from .certify import Certificate
from .errors import CycleDegreeInconsistency, DegenerateCoordinates, DomainError, FatalInconsistency, ModeError
from .simplicial import Chain, SimplicialComplex, fundamental_class

__version__ = "0.1.0"

__all__ = [
    "ArtinianAlgebra",
    "BinaryField",
    "Certificate",
    "Chain",
    "CoordMatrix",
    "CycleDegreeInconsistency",
    "DegenerateCoordinates",
    "DomainError",
    "FatalInconsistency",
    "GorensteinAlgebra",
    "ModeError",
    "PrimeField",
    "RationalFunctionField",
    "SimplicialComplex",
    "default_field",
    "degree_functional",
    "fundamental_class",
    "gorensteinify",
]
