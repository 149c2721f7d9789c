"""Error taxonomy shared by all modules.

Every failure mode raised on purpose by this package derives from
FresnelPseudoError, so callers (and the CLI) can distinguish numerical
failures from programming errors.
"""


class FresnelPseudoError(Exception):
    """Base class for all errors raised by fresnelpseudo."""


class DomainError(FresnelPseudoError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class NonConvergent(FresnelPseudoError, ArithmeticError):
    """A series or oscillatory tail failed to stabilize within its iteration cap."""


class UnsupportedClosedForm(FresnelPseudoError, ValueError):
    """A closed-form evaluation was requested outside the parameters that have one."""


class DimensionCap(FresnelPseudoError, ValueError):
    """A cylinder event exceeds the supported number of time points."""


class QuadratureFailure(FresnelPseudoError, ArithmeticError):
    """A quadrature error estimate exceeded the requested tolerance."""


class InvalidRegime(FresnelPseudoError, ValueError):
    """Subordination parameters map outside the admissible stable-law region."""


class UnsupportedExponent(FresnelPseudoError, ValueError):
    """The sampler does not support this stable exponent (use the Cauchy path)."""


class RootFindingFailure(FresnelPseudoError, ArithmeticError):
    """Polynomial root residuals exceeded tolerance after polishing."""
