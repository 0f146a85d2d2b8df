"""Exception hierarchy shared by all modules."""


class DiracSLError(Exception):
    """Base class for every error raised by this package."""


class DomainError(DiracSLError, ValueError):
    """An argument lies outside the domain an operation accepts."""


class ValidationError(DomainError):
    """Structured input (weights, potentials, problem files) failed validation."""


class NumericalFailure(DiracSLError, ArithmeticError):
    """Integration or root finding produced non-finite or unusable numbers."""


class InconsistencyError(NumericalFailure):
    """Hypothesis tests and polynomial structure disagree.

    Usually means a tolerance sits too close to a hypothesis margin; the
    message carries the margins involved.
    """


class TridiagonalUnavailable(DiracSLError):
    """Hypothesis (H) fails, so no characteristic matrix exists.

    Use the characteristic-polynomial route instead.
    """


class SpectralRegimeError(DiracSLError):
    """A single-Dirac problem is outside the regime with one positive eigenvalue."""


class ZeroEigenvalueRegime(SpectralRegimeError):
    """The Dirichlet problem for -y''+qy=0 is singular (Case II): the spectrum is {0} or all of C."""


class EmptySpectrum(SpectralRegimeError):
    """phi(t)psi(t) vanishes at the node, so the single-Dirac problem has no eigenvalue."""
