from .artinian import ArtinianAlgebra, build_artinian, face_monomials, is_squarefree
from .coords import CoordMatrix, explicit, generic, jet_coords, moment_curve, point_values, specialize_coords, symbolic
from .degree import DegreeFunctional, degree_functional, degree_map, lee_square_degree
from .gorenstein import GorensteinAlgebra, MonomialIdealBasis, gorensteinify, monomial_ideal, subspace_gorensteinify

__all__ = [
    "ArtinianAlgebra",
    "CoordMatrix",
    "DegreeFunctional",
    "GorensteinAlgebra",
    "MonomialIdealBasis",
    "build_artinian",
    "degree_functional",
    "degree_map",
    "explicit",
    "face_monomials",
    "generic",
    "gorensteinify",
    "is_squarefree",
    "jet_coords",
    "lee_square_degree",
    "moment_curve",
    "monomial_ideal",
    "point_values",
    "specialize_coords",
    "subspace_gorensteinify",
    "symbolic",
]
