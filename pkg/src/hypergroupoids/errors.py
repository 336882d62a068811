"""Exception types shared across the library."""


class SimplicialError(ValueError):
    """Structural problem with a simplicial object or morphism."""


class TruncationError(SimplicialError):
    """An operation needs more stored levels than the object carries.

    Callers can extend the object through its coskeleton and retry.
    """


class NotHypergroupoidError(SimplicialError):
    """An operation required a hypergroupoid and refused to guess."""


class CocycleError(SimplicialError):
    """Descent data fails the two-simplex compatibility condition."""

    def __init__(self, message, simplex=None):
        super().__init__(message)
        self.simplex = simplex


class EnumerationLimitError(RuntimeError):
    """An enumeration exceeded the configured work budget."""

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class DocumentError(ValueError):
    """A document failed to parse against its schema."""
