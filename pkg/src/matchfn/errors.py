"""Exception types shared across the package."""


class MatchfnError(Exception):
    """Base class for all errors raised by this package."""


class PanelValidationError(MatchfnError, ValueError):
    """A panel or one of its rows violates a structural invariant.

    Carries the offending row (1-based, counting data rows in file order)
    and field name when they are known, so callers can point at the exact
    cell in the input file.
    """

    def __init__(self, message, *, row=None, field=None, market=None):
        parts = []
        if market is not None:
            parts.append(f"market {market!r}")
        if row is not None:
            parts.append(f"row {row}")
        if field is not None:
            parts.append(f"field {field!r}")
        if parts:
            message = f"{message} ({', '.join(parts)})"
        super().__init__(message)
        self.row = row
        self.field = field
        self.market = market


class DegenerateSupportError(MatchfnError, ValueError):
    """A coordinate is constant across the panel, so min-max scaling
    (and hence kernel estimation) is undefined for it."""


class SupportError(MatchfnError, RuntimeError):
    """A kernel query fell so far from the data that total kernel mass
    dropped below the configured floor: the point is outside the region
    where the conditional CDF is estimable (extrapolation)."""


class EstimationDegradedError(MatchfnError, RuntimeError):
    """Too many observations hit support edges for the recovered series
    to be trusted (more than half edge-flagged)."""


class ConvergenceError(MatchfnError, RuntimeError):
    """An iterative solver exhausted its iteration budget."""


class ConfigError(MatchfnError, ValueError):
    """A run-configuration file is missing, malformed, or inconsistent."""
