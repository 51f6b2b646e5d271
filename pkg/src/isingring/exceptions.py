"""Exception types shared across the package."""


class NumericalError(RuntimeError):
    """A numerical result violates its tolerance badly enough to be untrustworthy."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed (e.g. assembled spectrum has the wrong size)."""


class TrackingError(RuntimeError):
    """Eigenvector continuation could not decide between candidate levels."""


class ConventionError(RuntimeError):
    """A degenerate level has no member satisfying the adopted convention."""


class ResourceLimitError(RuntimeError):
    """Requested problem size exceeds the dense-storage ceiling."""
