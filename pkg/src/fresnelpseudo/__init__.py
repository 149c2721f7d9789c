"""Signed pseudo-process toolkit: generalized Airy pseudo-densities,
signed cylinder measures, stable time changes, and the closed-form
Cauchy-mixture case with its modality analysis."""

from .density import (
    OscillationConstants,
    PseudoParams,
    char_fn,
    density,
    has_closed_form,
    pde_fourier_residual,
    weibull_representation,
)
from .errors import (
    DimensionCap,
    DomainError,
    FresnelPseudoError,
    InvalidRegime,
    NonConvergent,
    QuadratureFailure,
    RootFindingFailure,
    UnsupportedClosedForm,
    UnsupportedExponent,
)
from .measure import CylinderEvent, box_kernel_integral, cylinder_measure, line_total
from .mixture import (
    ModalityReport,
    StationaryPoint,
    cauchy_mixture_pdf,
    classify,
    critical_alpha,
    inflection_parameters,
    mode_analysis,
    pdf_derivative,
    second_derivative_at_stationary,
)
from .sampling import (
    MixtureSpec,
    SeededStream,
    empirical_char_fn,
    sample_cauchy_mixture,
    sample_mixture,
    sample_stable,
)
from .special import (
    AiryOrder,
    WeibullParams,
    WrightArgs,
    airy_cdf_tail,
    airy_grid,
    airy_point,
    airy_quadrature,
    airy_series,
    stable_subordinator_pdf,
    weibull_pdf,
    wright_series,
)
from .subordination import (
    CauchyCase,
    StableParams,
    SubordinationSpec,
    parameter_map,
    subordinated_char_fn,
    subordinated_density_quadrature,
    subordinated_density_series,
    subordinated_weibull_repr,
)

__version__ = "0.1.0"

__all__ = [
    "AiryOrder",
    "CauchyCase",
    "CylinderEvent",
    "MixtureSpec",
    "ModalityReport",
    "OscillationConstants",
    "PseudoParams",
    "SeededStream",
    "StableParams",
    "StationaryPoint",
    "SubordinationSpec",
    "WeibullParams",
    "WrightArgs",
    "airy_cdf_tail",
    "airy_grid",
    "airy_point",
    "airy_quadrature",
    "airy_series",
    "box_kernel_integral",
    "cauchy_mixture_pdf",
    "char_fn",
    "classify",
    "critical_alpha",
    "cylinder_measure",
    "density",
    "empirical_char_fn",
    "has_closed_form",
    "inflection_parameters",
    "line_total",
    "mode_analysis",
    "parameter_map",
    "pde_fourier_residual",
    "pdf_derivative",
    "sample_cauchy_mixture",
    "sample_mixture",
    "sample_stable",
    "second_derivative_at_stationary",
    "stable_subordinator_pdf",
    "subordinated_char_fn",
    "subordinated_density_quadrature",
    "subordinated_density_series",
    "subordinated_weibull_repr",
    "weibull_pdf",
    "weibull_representation",
    "wright_series",
    "DimensionCap",
    "DomainError",
    "FresnelPseudoError",
    "InvalidRegime",
    "NonConvergent",
    "QuadratureFailure",
    "RootFindingFailure",
    "UnsupportedClosedForm",
    "UnsupportedExponent",
    "__version__",
]
