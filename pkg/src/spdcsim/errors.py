"""Exception hierarchy shared across the package.

DomainError covers physically invalid requests (wavelength outside the
transparency window, no phase-matching root, collapsed wavefunction support);
ConfigError covers malformed user input (bad config keys, unknown crystal,
bad CLI values).  The CLI maps ConfigError -> exit 2 and DomainError -> exit 3.
"""


class SpdcsimError(Exception):
    pass


class ConfigError(SpdcsimError):
    """Invalid configuration or user input."""


class DomainError(SpdcsimError):
    """Physically invalid request (outside model validity)."""


class WindowingError(DomainError):
    """Grid window too small: edge leakage above tolerance."""

    def __init__(self, message, edge_magnitude=None):
        super().__init__(message)
        self.edge_magnitude = edge_magnitude
