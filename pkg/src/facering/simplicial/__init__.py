from .complex import (
    RelativeComplex,
    SimplicialComplex,
    bipyramid,
    cone,
    cross_polytope_boundary,
    disjoint_union,
    join,
    link,
    path_graph,
    polygon,
    rp2_six,
    simplex_boundary,
    star,
    star_link,
    suspension,
)
from .homology import (
    Chain,
    betti_numbers,
    boundary_matrix,
    chain_from_labels,
    cycle_space,
    fundamental_class,
    pseudomanifold_check,
    support_of_cycle,
)
from .invariants import cm_check, fhg_vectors, is_cohen_macaulay, is_m_vector, macaulay_bound
