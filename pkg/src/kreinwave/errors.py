"""Exception types shared across the package."""


class KreinwaveError(Exception):
    """Base class for all package-specific errors."""


class SingularGamma(KreinwaveError):
    """The auxiliary-space coupling matrix is numerically singular."""


class InadmissibleLambda(KreinwaveError, ValueError):
    """Spectral parameter outside the provider's admissible set."""


class GridTooCoarse(KreinwaveError):
    """Input field violates the grid's decay or resolution guard."""


class DomainViolation(KreinwaveError):
    """Initial state fails the discrete domain (boundary-coupling) check."""


class NotInDomain(KreinwaveError):
    """Sphere-average limit does not converge for this field."""


class RTooSmall(KreinwaveError):
    """Sphere radius below the resolvable scale of the sampled field."""


class QuadratureNotConverged(KreinwaveError):
    """Adaptive quadrature error estimate exceeds the requested tolerance."""


class NotPositiveDefinite(KreinwaveError):
    """A Gram matrix that must be positive definite is not."""


class ConfigError(KreinwaveError):
    """Scenario configuration is malformed or violates a constraint."""
