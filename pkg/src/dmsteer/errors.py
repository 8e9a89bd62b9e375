"""Exception types raised across the package."""


class DmSteerError(Exception):
    """Base class for package errors."""


class NonHermitian(DmSteerError, ValueError):
    """A matrix failed the Hermitian symmetry check."""


class NotPositive(DmSteerError, ValueError):
    """A state has an eigenvalue below the roundoff tolerance."""


class BadSubset(DmSteerError, ValueError):
    """Qubit subset is empty, out of range, unordered or has duplicates."""


class WrongDimension(DmSteerError, ValueError):
    """Operator has the wrong shape for the requested operation."""


class InvalidState(DmSteerError, ValueError):
    """Matrix is not a valid density operator."""


class UnsupportedPair(DmSteerError, ValueError):
    """Node pair has no closed form to compare against."""


class UnknownPreset(DmSteerError, KeyError):
    """No figure preset with that name."""


class ConfigError(DmSteerError, ValueError):
    """Sweep configuration is malformed."""
