"""Moebius-invariant probability distributions on the Poincare disc.

A circle family and a disc family closed under the disc automorphism group,
with exact samplers, closed-form and quadrature CDFs, Karcher-mean and
maximum-likelihood estimation, and a cross-entropy optimizer that searches
the disc through the family.
"""

from .conf_natural import (
    ConfNatural,
    Mixture,
    cn_log_pdf,
    cn_mean,
    cn_normalization_quadrature,
    cn_pdf_hyp,
    cn_pdf_lebesgue,
    cn_pushforward,
    cn_radial_cdf,
    cn_radial_cdf_general,
    cn_sample,
    cn_sample_complex,
    cn_transport,
    mix_pdf,
    mix_sample,
)
from .errors import DomainError, NonConvergenceError, NumericError, ObjectiveError
from .estimation import (
    ALPHA_CAP,
    CemConfig,
    CemIterate,
    FitResult,
    KarcherConfig,
    cem_optimize,
    concentration_mle,
    fit_mle,
    karcher_mean,
    loglik_location_gradient,
    total_log_likelihood,
)
from .geometry import (
    ORIGIN,
    CirclePoint,
    DiscPoint,
    MoebiusTransform,
    geodesic_translation,
    hyp_distance,
    hyp_exp,
    hyp_log,
    hyp_midpoint,
    mobius_apply,
    mobius_apply_boundary,
    mobius_compose,
    mobius_inverse,
    point_reflection,
    tau_density,
)
from .hyp2f1 import hyp2f1_aa1, poisson_circle_integral
from .quadrature import disc_integral
from .rng import RngStream
from .wrapped_cauchy import WrappedCauchy, wc_mean, wc_pdf, wc_pushforward, wc_sample

__version__ = "0.1.0"

__all__ = [
    "ALPHA_CAP",
    "CemConfig",
    "CemIterate",
    "CirclePoint",
    "ConfNatural",
    "DiscPoint",
    "DomainError",
    "FitResult",
    "KarcherConfig",
    "Mixture",
    "MoebiusTransform",
    "NonConvergenceError",
    "NumericError",
    "ORIGIN",
    "ObjectiveError",
    "RngStream",
    "WrappedCauchy",
    "cem_optimize",
    "cn_log_pdf",
    "cn_mean",
    "cn_normalization_quadrature",
    "cn_pdf_hyp",
    "cn_pdf_lebesgue",
    "cn_pushforward",
    "cn_radial_cdf",
    "cn_radial_cdf_general",
    "cn_sample",
    "cn_sample_complex",
    "cn_transport",
    "concentration_mle",
    "disc_integral",
    "fit_mle",
    "geodesic_translation",
    "hyp2f1_aa1",
    "hyp_distance",
    "hyp_exp",
    "hyp_log",
    "hyp_midpoint",
    "karcher_mean",
    "loglik_location_gradient",
    "mix_pdf",
    "mix_sample",
    "mobius_apply",
    "mobius_apply_boundary",
    "mobius_compose",
    "mobius_inverse",
    "point_reflection",
    "poisson_circle_integral",
    "tau_density",
    "total_log_likelihood",
    "wc_mean",
    "wc_pdf",
    "wc_pushforward",
    "wc_sample",
]
