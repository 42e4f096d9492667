from .calculus import directional_derivative, partial_derivative, poly_arith, specialize
from .fields import (
    MERSENNE_61,
    BinaryField,
    DomainError,
    FieldDescriptor,
    JetRing,
    PrimeField,
    UnluckySpecialization,
    default_field,
    make_field,
)
from .linalg import ExactMatrix, det, det_cofactor, rank, rank_kernel
from .poly import MultiPoly, PolyRing, RatFunc, RationalFunctionField


def det_fraction_free(m: ExactMatrix):
    if m.rows != m.cols:
        raise DomainError("determinant of a non-square matrix")
    return det(m.domain, [list(r) for r in m.entries])


__all__ = [
    "MERSENNE_61",
    "BinaryField",
    "DomainError",
    "ExactMatrix",
    "FieldDescriptor",
    "JetRing",
    "MultiPoly",
    "PolyRing",
    "PrimeField",
    "RatFunc",
    "RationalFunctionField",
    "UnluckySpecialization",
    "default_field",
    "det",
    "det_cofactor",
    "det_fraction_free",
    "directional_derivative",
    "make_field",
    "partial_derivative",
    "poly_arith",
    "rank",
    "rank_kernel",
    "specialize",
]
