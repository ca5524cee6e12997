"""Truncated single-variable power series with exact coefficients."""

from fractions import Fraction
from typing import Iterable, List, Union

from ..core.exceptions import SeriesPreconditionError
from ..exact.arithmetic import Exact


class UniSeries:
    """
    c_0 + c_1 x + ... + c_n x^n with n = degree.

    Arithmetic between series of different degree truncates to the smaller.
    """

    __slots__ = ("degree", "coefficients")

    def __init__(self, coefficients: Iterable[Exact], degree: int):
        values: List[Fraction] = [Fraction(c) for c in coefficients][: degree + 1]
        values.extend([Fraction(0)] * (degree + 1 - len(values)))
        self.degree = degree
        self.coefficients = tuple(values)

    @classmethod
    def constant(cls, value: Exact, degree: int) -> "UniSeries":
        return cls([value], degree)

    @classmethod
    def variable(cls, degree: int) -> "UniSeries":
        return cls([0, 1], degree)

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n] if 0 <= n <= self.degree else Fraction(0)

    def __add__(self, other: Union["UniSeries", int, Fraction]) -> "UniSeries":
        if not isinstance(other, UniSeries):
            other = UniSeries.constant(other, self.degree)
        degree = min(self.degree, other.degree)
        return UniSeries((self[n] + other[n] for n in range(degree + 1)), degree)

    __radd__ = __add__

    def __neg__(self) -> "UniSeries":
        return UniSeries((-c for c in self.coefficients), self.degree)

    def __sub__(self, other: Union["UniSeries", int, Fraction]) -> "UniSeries":
        return self + (-other)

    def __rsub__(self, other: Union[int, Fraction]) -> "UniSeries":
        return (-self) + other

    def __mul__(self, other: Union["UniSeries", int, Fraction]) -> "UniSeries":
        if not isinstance(other, UniSeries):
            return UniSeries((c * other for c in self.coefficients), self.degree)
        degree = min(self.degree, other.degree)
        out = [Fraction(0)] * (degree + 1)
        for i in range(degree + 1):
            if not self[i]:
                continue
            for j in range(degree + 1 - i):
                out[i + j] += self[i] * other[j]
        return UniSeries(out, degree)

    __rmul__ = __mul__

    def shift(self, k: int) -> "UniSeries":
        """Multiply by x^k; negative k drops the low coefficients."""
        if k >= 0:
            return UniSeries([0] * k + list(self.coefficients), self.degree)
        return UniSeries(self.coefficients[-k:], self.degree + k)

    def derivative(self) -> "UniSeries":
        return UniSeries((n * self[n] for n in range(1, self.degree + 1)), self.degree - 1)

    def inverse(self) -> "UniSeries":
        """
        Raises:
            SeriesPreconditionError: If the constant term is zero
        """
        if self[0] == 0:
            raise SeriesPreconditionError("cannot invert a series with zero constant term")
        out = [Fraction(0)] * (self.degree + 1)
        out[0] = 1 / self[0]
        for n in range(1, self.degree + 1):
            out[n] = -sum(self[k] * out[n - k] for k in range(1, n + 1)) * out[0]
        return UniSeries(out, self.degree)

    def sqrt(self) -> "UniSeries":
        """
        Square root with constant term 1 by Newton iteration s <- (s + S/s) / 2.

        Raises:
            SeriesPreconditionError: If the constant term is not 1
        """
        if self[0] != 1:
            raise SeriesPreconditionError("sqrt needs a series with constant term 1")
        root = UniSeries.constant(1, self.degree)
        precision = 1
        while precision <= self.degree:
            precision *= 2
            root = (root + self * root.inverse()) * Fraction(1, 2)
        return root

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniSeries):
            return NotImplemented
        degree = min(self.degree, other.degree)
        return all(self[n] == other[n] for n in range(degree + 1))

    __hash__ = None

    def __repr__(self) -> str:
        return f"UniSeries({[str(c) for c in self.coefficients]})"
