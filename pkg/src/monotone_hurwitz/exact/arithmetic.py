"""
Exact scalar arithmetic.

ExactInteger is Python's ``int`` and ExactRational is ``fractions.Fraction``
(always normalised, positive denominator). This module adds the rising
product with the reciprocal convention for negative lengths, plus the
rendering rules used by every output surface.
"""

from fractions import Fraction
from math import comb, factorial
from typing import Union

from ..core.exceptions import ArithmeticPoleError, InternalInconsistencyError

Exact = Union[int, Fraction]

__all__ = [
    "Exact",
    "rising",
    "binomial",
    "factorial",
    "as_integer",
    "render_exact",
    "parse_exact",
]


def rising(a: Exact, k: int) -> Fraction:
    """
    Rising product a(a+1)...(a+k-1) with k factors.

    For k < 0 the product is 1 / rising(a + k, -k).

    Args:
        a: Base value (integer or rational)
        k: Number of factors, may be negative

    Returns:
        Exact rational value

    Raises:
        ArithmeticPoleError: If k < 0 and one of the reciprocal factors is zero
    """
    a = Fraction(a)
    if k >= 0:
        result = Fraction(1)
        for i in range(k):
            result *= a + i
        return result

    denominator = rising(a + k, -k)
    if denominator == 0:
        raise ArithmeticPoleError(
            f"rising({a}, {k}) has a pole: a factor of rising({a + k}, {-k}) is zero"
        )
    return 1 / denominator


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def as_integer(value: Exact, what: str = "value") -> int:
    """
    Narrow an exact value that must be an integer count.

    Raises:
        InternalInconsistencyError: If the value has a non-trivial denominator
    """
    value = Fraction(value)
    if value.denominator != 1:
        raise InternalInconsistencyError(f"{what} should be an integer, got {value}")
    return value.numerator


def render_exact(value: Exact) -> str:
    """Render integers as decimals and rationals as num/den."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_exact(text: str) -> Fraction:
    """Inverse of :func:`render_exact`."""
    return Fraction(text.strip())
