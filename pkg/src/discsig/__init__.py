"""Exact expected signature of planar Brownian motion stopped at the unit circle.

The package computes, in exact rational arithmetic, the tensor-series
expansion of the expected Stratonovich signature of a Brownian path started
inside the unit disc and stopped on first exit.  Two independent checks ship
with it: a direct polynomial solver for the defining PDE hierarchy and a
Monte-Carlo path simulator.
"""

from .cartesian import (
    CartesianField,
    PointEvaluation,
    boundary_defects,
    cartesianize,
    diff_fields,
    field_from_word_polynomials,
    rotate,
    rotate_series,
)
from .eigenbasis import (
    EigenGradedSeries,
    beta_index,
    eigen_decompose,
    eigen_project,
    eigen_slices,
    f_op,
    f_op_slotwise,
    to_e_basis,
    to_v_basis,
)
from .montecarlo import (
    SimConfig,
    SignatureEstimate,
    chen_product,
    mc_compare,
    path_signature,
    segment_signature,
    simulate_exit_signature,
)
from .pde import pde_hierarchy, poisson_solve_disc
from .poly import DISC_BOUNDARY, Poly2, divmod_boundary
from .recurrence import (
    PipelineResult,
    SeriesKernel,
    assemble_radial_series,
    boundary_coefficients,
    boundary_operator,
    boundary_weight,
    leading_coefficient,
    radial_coefficient_table,
    radial_weight,
    raw_coefficient_table,
    run_pipeline,
)
from .scalars import GaussianRational, I, ONE, ZERO
from .tensors import InternalConsistencyError, TensorSeries

__version__ = "0.1.0"

__all__ = [
    "CartesianField",
    "DISC_BOUNDARY",
    "EigenGradedSeries",
    "GaussianRational",
    "I",
    "InternalConsistencyError",
    "ONE",
    "PipelineResult",
    "PointEvaluation",
    "Poly2",
    "SeriesKernel",
    "SignatureEstimate",
    "SimConfig",
    "TensorSeries",
    "ZERO",
    "assemble_radial_series",
    "beta_index",
    "boundary_coefficients",
    "boundary_defects",
    "boundary_operator",
    "boundary_weight",
    "cartesianize",
    "chen_product",
    "diff_fields",
    "divmod_boundary",
    "eigen_decompose",
    "eigen_project",
    "eigen_slices",
    "f_op",
    "f_op_slotwise",
    "field_from_word_polynomials",
    "leading_coefficient",
    "mc_compare",
    "path_signature",
    "pde_hierarchy",
    "poisson_solve_disc",
    "radial_coefficient_table",
    "radial_weight",
    "raw_coefficient_table",
    "rotate",
    "rotate_series",
    "run_pipeline",
    "segment_signature",
    "simulate_exit_signature",
    "to_e_basis",
    "to_v_basis",
]
