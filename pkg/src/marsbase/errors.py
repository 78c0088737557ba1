"""Exception types shared across the model."""


class MarsBaseError(Exception):
    """Base class for every error raised by this package."""


class DomainError(MarsBaseError, ValueError):
    """A model input or result violates a physical or structural invariant."""


class ConfigError(MarsBaseError, ValueError):
    """A run configuration could not be parsed or resolved."""
