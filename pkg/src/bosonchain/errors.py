"""Exception types shared across the package."""


class BosonChainError(Exception):
    """Base class for physics-level refusals (as opposed to usage errors)."""


class UnstableRegime(BosonChainError):
    """Raised when a computation requires a dynamically stable chain and the
    parameters sit outside the stable region (a squared effective coupling
    is non-positive, or the drift matrix has a non-negative spectral abscissa).

    Carries ``spectral_abscissa`` when the refusal comes from the drift matrix.
    """

    def __init__(self, msg, spectral_abscissa=None):
        super().__init__(msg)
        self.spectral_abscissa = spectral_abscissa


class NotTopological(BosonChainError):
    """Edge-mode analysis requested outside the topological phase."""


class WrongPhase(BosonChainError):
    """A phase-specific approximation was called in the wrong phase."""


class AnalyticUnsupported(BosonChainError):
    """The analytic (Langevin-sum) engine only covers real couplings
    (relative phases 0 or pi) and mu = 0."""


class UnphysicalCovariance(BosonChainError):
    """A covariance matrix violates the uncertainty relation V + i*Omega/2 >= 0."""
