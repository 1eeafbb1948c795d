"""Exception hierarchy shared by every module."""


class OcaError(Exception):
    """Base class for all errors raised by ocasbox."""


class DomainError(OcaError, ValueError):
    """An argument lies outside the domain of the operation."""


class EncodingError(DomainError):
    """A rule number or mask does not fit the requested width."""


class ConfigurationError(OcaError, ValueError):
    """An experiment parameter is outside the supported range."""
