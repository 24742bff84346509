"""Exception types shared across the package."""


class LieError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedAlgebraError(LieError, ValueError):
    """Algebra family/rank outside the supported simple types."""


class NonDominantError(LieError, ValueError):
    """A highest weight argument had a negative Dynkin label."""


class InternalConsistencyError(LieError):
    """An exactness or cross-check assertion failed mid-computation.

    These checks guard the integer arithmetic (exact divisions in the
    multiplicity recursion, orbit cardinalities, non-negative residuals
    during highest-weight subtraction).  Any failure means a bug, not
    bad user input.
    """


class EmbeddingError(LieError):
    """Construction or verification of the subalgebra embedding failed."""
