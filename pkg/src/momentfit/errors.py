"""Exception hierarchy.

Two broad classes so that batch tooling can distinguish bad input from
numerical failure: ``DataError`` (malformed files, degenerate regions,
incompatible options) and ``NumericalError`` (ill conditioning, quadrature
that refuses to converge, samplers that stall).
"""


class MomentfitError(Exception):
    """Base class for all package errors."""


class DataError(MomentfitError, ValueError):
    """Invalid input: files, regions, options, domains."""


class ParseError(DataError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DegenerateRegionError(DataError):
    pass


class DomainError(DataError):
    """Point outside the finite domain of a basis family."""


class NumericalError(MomentfitError, RuntimeError):
    """Computation failed for numerical reasons."""


class IllConditionedGramError(NumericalError):
    def __init__(self, condition):
        super().__init__(f"Gram matrix is ill-conditioned (condition estimate {condition:.3e})")
        self.condition = condition


class SingularCovarianceError(NumericalError):
    def __init__(self, eigenvalue, eigenvector):
        super().__init__(
            f"covariance is singular: eigenvalue {eigenvalue:.3e} "
            f"along direction {eigenvector}"
        )
        self.eigenvalue = eigenvalue
        self.eigenvector = eigenvector


class QuadratureError(NumericalError):
    """Adaptive quadrature did not converge within its node budget."""


class DependentFunctionError(DataError):
    """Gram-Schmidt hit a (near-)dependent function."""

    def __init__(self, index, ratio):
        super().__init__(
            f"function at index {index} is numerically dependent on the previous "
            f"ones (residual norm ratio {ratio:.3e})"
        )
        self.index = index
        self.ratio = ratio


class ConstraintError(DataError):
    """Normalization constraint cannot be satisfied (all basis integrals zero)."""


class SamplingError(NumericalError):
    """Rejection sampler failed (negative density or hopeless acceptance rate)."""
