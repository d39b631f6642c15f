"""Exception types shared across the package."""


class SfrError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(SfrError):
    """Invalid or inconsistent run configuration."""


class DomainError(SfrError):
    """Numerical input outside the supported range of a routine."""
