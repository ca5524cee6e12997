"""
Custom exceptions for Monotone Hurwitz Lab.

Defines exception hierarchy for different error scenarios
so the CLI can map failures to exit codes and readable messages.
"""


class HurwitzError(Exception):
    """Base exception for all Monotone Hurwitz Lab errors."""
    pass


# Configuration Errors
class ConfigError(HurwitzError):
    """Base exception for configuration errors."""
    pass


class InvalidBoundError(ConfigError):
    """Raised when an enumeration or truncation cap is outside its hard limit."""
    pass


# Input Errors
class InputError(HurwitzError, ValueError):
    """Base exception for input errors."""
    pass


class InvalidPartitionError(InputError):
    """Raised when a partition has non-positive parts or cannot be parsed."""
    pass


class InvalidPermutationError(InputError):
    """Raised when an image table is not a bijection of {0, ..., d-1}."""
    pass


class SlotMisuseError(InputError):
    """Raised when a catalyst operator is applied to the wrong variable slot."""
    pass


# Computation Errors
class ComputationError(HurwitzError):
    """Base exception for errors raised while computing a value."""
    pass


class BoundExceededError(ComputationError):
    """Raised when a brute-force query exceeds its configured enumeration limits."""
    pass


class ArithmeticPoleError(ComputationError, ZeroDivisionError):
    """Raised when a rising product with negative length hits a zero factor."""
    pass


class NoGenusError(ComputationError):
    """Raised when (alpha, r) satisfies the Riemann-Hurwitz relation for no genus."""
    pass


class NonCentralElementError(ComputationError):
    """Raised when a class coefficient is requested from a non-central element."""
    pass


class SeriesPreconditionError(ComputationError):
    """Raised when exp/log/sqrt/power receive a series with the wrong constant term."""
    pass


class InternalInconsistencyError(ComputationError):
    """Raised when a quantity that must be an integer count is not, or two exact routes disagree."""
    pass


# Verification Errors
class VerificationError(HurwitzError):
    """Base exception for verification errors."""
    pass


class VerificationFailure(VerificationError):
    """Raised when two independent computations disagree."""

    def __init__(self, message: str, key=None, expected=None, actual=None):
        super().__init__(message)
        self.key = key
        self.expected = expected
        self.actual = actual


# Cache Errors
class CacheError(HurwitzError):
    """Base exception for memo cache errors."""
    pass


class CacheFormatError(CacheError):
    """Raised when a memo cache file has a missing or unknown header."""
    pass
