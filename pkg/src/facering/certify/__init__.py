from .anisotropy import certify_char2_anisotropy, squaring_matrix
from .certificate import FAIL, PASS, REPORT, Certificate
from .checks import (
    LefschetzQuery,
    certify_biased_pairing,
    certify_hall_laman,
    certify_hard_lefschetz,
    certify_top_heavy,
    check_g_vector,
    check_poincare_duality,
    kronecker_transversality,
    transversal_prime_check,
)
from .experiments import isotropic_vertex_search, moment_curve_probe
from .identities import (
    identity_suite,
    lee_agreement,
    lee_agreement_at_points,
    square_derivative_at_points,
    symbolic_with_copy,
    verify_compatible_formula,
    verify_locality,
    verify_pp_identity,
    verify_square_derivative_lemma,
)
from .suspension import suspension_equivalence

__all__ = [
    "FAIL",
    "PASS",
    "REPORT",
    "Certificate",
    "LefschetzQuery",
    "certify_biased_pairing",
    "certify_char2_anisotropy",
    "certify_hall_laman",
    "certify_hard_lefschetz",
    "certify_top_heavy",
    "check_g_vector",
    "check_poincare_duality",
    "identity_suite",
    "isotropic_vertex_search",
    "kronecker_transversality",
    "lee_agreement",
    "lee_agreement_at_points",
    "moment_curve_probe",
    "square_derivative_at_points",
    "squaring_matrix",
    "suspension_equivalence",
    "symbolic_with_copy",
    "transversal_prime_check",
    "verify_compatible_formula",
    "verify_locality",
    "verify_pp_identity",
    "verify_square_derivative_lemma",
]
