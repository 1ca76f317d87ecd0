"""Weighted-kernel harmonic functions on the unit disk.

A library and CLI for the two-parameter family of disk functions
annihilated by the weighted elliptic operator

    (1-|z|^2) [ (1-|z|^2) d^2/(dz dzbar) + alpha z d/dz
                + beta zbar d/dzbar - alpha beta ],

built around the weighted Poisson kernel, the hypergeometric series
expansion, explicit bound constants, and numerical audits of the
inequalities those constants enter.
"""

from .bounds import (
    HEINZ_LOWER_BOUND,
    BoundReport,
    HolderPair,
    coefficient_bound,
    distortion_constant,
    full_report,
    geometric_constants,
    growth_constant,
    heinz_functional,
    means_constant,
    mp_growth_factor,
    partial_constant,
    rado_radius_bound,
)
from .boundary import BoundaryFunction, from_fourier, from_samples, fourier_from_samples, lp_norm
from .errors import (
    BoundaryFileError,
    ConvergenceError,
    DomainError,
    ParameterError,
    PoleError,
    StencilError,
)
from .harmonic import (
    DiskPoint,
    HarmonicSnapshot,
    SeriesCoefficients,
    coefficients_from_boundary,
    evaluate_expansion,
    integral_means,
    jacobian_norm,
    operator_residual,
    poisson_extension,
    poisson_integral,
    radial_angular_derivatives,
    snapshot,
    wirtinger_derivatives,
)
from .kernel import AlphaBeta, make_params, poisson_kernel, unnormalized_kernel
from .specfun import (
    HypParams,
    beta,
    gamma,
    gauss_2f1,
    gauss_2f1_at_one,
    gauss_2f1_derivative,
    pochhammer,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaBeta",
    "BoundReport",
    "BoundaryFileError",
    "BoundaryFunction",
    "ConvergenceError",
    "DiskPoint",
    "DomainError",
    "HEINZ_LOWER_BOUND",
    "HarmonicSnapshot",
    "HolderPair",
    "HypParams",
    "ParameterError",
    "PoleError",
    "SeriesCoefficients",
    "StencilError",
    "beta",
    "coefficient_bound",
    "coefficients_from_boundary",
    "distortion_constant",
    "evaluate_expansion",
    "from_fourier",
    "from_samples",
    "fourier_from_samples",
    "full_report",
    "gamma",
    "gauss_2f1",
    "gauss_2f1_at_one",
    "gauss_2f1_derivative",
    "geometric_constants",
    "growth_constant",
    "heinz_functional",
    "integral_means",
    "jacobian_norm",
    "lp_norm",
    "make_params",
    "means_constant",
    "mp_growth_factor",
    "operator_residual",
    "partial_constant",
    "pochhammer",
    "poisson_extension",
    "poisson_integral",
    "poisson_kernel",
    "rado_radius_bound",
    "radial_angular_derivatives",
    "snapshot",
    "unnormalized_kernel",
    "wirtinger_derivatives",
]
