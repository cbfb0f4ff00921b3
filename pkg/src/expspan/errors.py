"""Exception types shared across the library."""


class DuplicateExponent(ValueError):
    """Two exponents coincide (within the duplicate tolerance)."""


class DuplicateLimit(ValueError):
    """Two cluster limits coincide (within the duplicate tolerance)."""


class EmptyCluster(ValueError):
    """A cluster (or the whole spectrum) has no members."""


class ResourceLimit(RuntimeError):
    """A computation would exceed its configured enumeration/iteration cap."""


class OutOfRegime(ValueError):
    """Inputs violate the hypothesis under which a bound is valid."""


class DimensionMismatch(ValueError):
    """Two subspaces of different dimensions were compared."""


class InsufficientData(ValueError):
    """Not enough usable records for the requested summary."""


class ConfigError(ValueError):
    """Malformed configuration input."""


class NearSingularGram(RuntimeError):
    """A Gram matrix is numerically rank deficient.

    Carries the offending eigenvalue estimates and, when raised from a
    parametric sweep, the spread value at which degeneracy occurred.
    """

    def __init__(self, message, min_eigenvalue=None, max_eigenvalue=None, epsilon=None):
        super().__init__(message)
        self.min_eigenvalue = min_eigenvalue
        self.max_eigenvalue = max_eigenvalue
        self.epsilon = epsilon
