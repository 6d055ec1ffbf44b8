"""Exception types shared across the package."""


class DomainError(ValueError):
    """A point or an intermediate value left the domain of validity.

    Raised e.g. when a kernel base has nonpositive real part, when a
    Cayley denominator degenerates, or when a differentiation circle
    exits the upper half-space.
    """


class DimensionMismatch(ValueError):
    """Operands live in ambient spaces of different complex dimension."""


class DecayError(ValueError):
    """A boundary integrand does not decay fast enough to integrate."""
