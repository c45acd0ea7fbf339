"""Spherical harmonic analysis on finite Gelfand pairs.

Build a finite permutation group, certify that a subgroup makes it a Gelfand
pair, compute the spherical functions and Plancherel weights, run spherical
Fourier transforms and multiplier operators in either spectral convention,
measure Schatten and operator norms, and machine-check the whole family of
identities and norm inequalities these objects satisfy.
"""

from .builtin_pairs import build_builtin, builtin_generators, make_pair, parse_builtin
from .gelfand import (
    GelfandPair,
    SphericalTable,
    biinv_inner,
    biinv_lp_norm,
    compute_spherical_functions,
    conv_coords,
    double_cosets,
    eigenfunction_residual,
    expand,
    functional_equation_residual,
    gelfand_pair,
    is_gelfand_pair,
    is_positive_definite,
    plancherel_weights,
    project_biinvariant,
    table_invariant_defects,
)
from .groups import FiniteGroup, build_group, convolve, involution, lp_norm, subgroup_closure
from .multiplier import (
    MultiplierOperator,
    adjoint,
    apply_kernel,
    apply_operator,
    build_operator,
    composition_defects,
    diagonal_identity_defect,
)
from .schatten import (
    SpectralReport,
    analytic_singular_values,
    op_norm_1_inf,
    op_norm_2_2,
    sampled_norm_lower_bound,
    schatten_norm,
    singular_values,
    spectral_report,
    trace,
)
from .transform import (
    COUNTING,
    PLANCHEREL,
    counting_coefficients,
    inverse_sft,
    plancherel_pairing,
    sft,
    spectral_lp_norm,
)
from .verify import TheoremReport, random_multiplier, replay_witness, run_suite

__version__ = "0.1.0"

__all__ = [
    "COUNTING",
    "FiniteGroup",
    "GelfandPair",
    "MultiplierOperator",
    "PLANCHEREL",
    "SpectralReport",
    "SphericalTable",
    "TheoremReport",
    "adjoint",
    "analytic_singular_values",
    "apply_kernel",
    "apply_operator",
    "biinv_inner",
    "biinv_lp_norm",
    "build_builtin",
    "build_group",
    "build_operator",
    "builtin_generators",
    "composition_defects",
    "compute_spherical_functions",
    "conv_coords",
    "convolve",
    "counting_coefficients",
    "diagonal_identity_defect",
    "double_cosets",
    "eigenfunction_residual",
    "expand",
    "functional_equation_residual",
    "gelfand_pair",
    "inverse_sft",
    "involution",
    "is_gelfand_pair",
    "is_positive_definite",
    "lp_norm",
    "make_pair",
    "op_norm_1_inf",
    "op_norm_2_2",
    "parse_builtin",
    "plancherel_pairing",
    "plancherel_weights",
    "project_biinvariant",
    "random_multiplier",
    "replay_witness",
    "run_suite",
    "sampled_norm_lower_bound",
    "schatten_norm",
    "sft",
    "singular_values",
    "spectral_lp_norm",
    "spectral_report",
    "subgroup_closure",
    "table_invariant_defects",
    "trace",
]
