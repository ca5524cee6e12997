"""
Coefficient tables of the genus-g, l-point series M_g(x_1, ..., x_l).

[x^e] M_g is H_g(alpha)/|C_alpha| for alpha = sorted(e + 1). The recursion
in x_1 reads, coefficientwise with e = (e_1, e_2, ..., e_l):

    seed            [g = 0, e = (0)]
    redundant join  sum_{a+b = e_1-1} c(g-1; a, b, e_2, ..., e_l)
    cut             sum_{j >= 2} (e_j + 1) c(g; e_1 + e_j + 1, e minus slots 1 and j)
    essential join  sum_{g'} sum_{S within {2..l}} sum_{a+b = e_1-1}
                        c(g'; a, e_S) c(g-g'; b, e_complement)

The cut line is the divided difference d/dx_j (x_1 F(x_1) - x_j F(x_j))/(x_1 - x_j)
taken monomial by monomial; nothing is divided.
"""

import csv
import io
import logging
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, Optional, Tuple

from ..core.exceptions import BoundExceededError, VerificationFailure
from ..core.models import HARD_LIMITS, ReconcileReport
from ..exact.arithmetic import render_exact
from ..exact.partitions import Partition, class_size
from ..recurrence.monotone import MonotoneRecurrence
from ..series.builders import one_point_closed_form, two_point_closed_form

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]

# Default caps; tables beyond these are refused
DEFAULT_CAPS = {"genus": 2, "points": 3, "degree": 8}


class CoeffTable:
    """Dense symmetric table of [x^e] M_g(x_1, ..., x_l) for every e_i <= degree."""

    def __init__(self, g: int, points: int, degree: int, values: Dict[Exponents, Fraction]):
        self.g = g
        self.points = points
        self.degree = degree
        self.values = values

    def entry(self, e: Exponents) -> Fraction:
        e = tuple(e)
        if len(e) != self.points:
            raise ValueError(f"expected {self.points} exponents, got {e}")
        return self.values.get(e, Fraction(0))

    def asymmetric_entries(self):
        """Exponent tuples whose value differs from the sorted tuple's."""
        return [
            e for e, value in self.values.items()
            if value != self.values.get(tuple(sorted(e, reverse=True)), Fraction(0))
        ]

    def is_symmetric(self) -> bool:
        return not self.asymmetric_entries()

    def row(self):
        """Values of a one-point table in degree order."""
        return [self.entry((n,)) for n in range(self.degree + 1)]

    def dump_csv(self) -> str:
        """CSV with header e1,...,el,value; rows in lexicographic exponent order."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow([f"e{i}" for i in range(1, self.points + 1)] + ["value"])
        for e in sorted(self.values):
            writer.writerow(list(e) + [render_exact(self.values[e])])
        return buffer.getvalue()

    def __repr__(self) -> str:
        return f"CoeffTable(g={self.g}, points={self.points}, degree={self.degree})"


class TopologicalRecursion:
    """
    Memoised evaluator of M_g coefficients.

    The measure (2g + l, total degree) drops strictly along every term, so the
    recursion terminates.
    """

    def __init__(self, caps: Optional[Dict[str, int]] = None):
        self.caps = dict(DEFAULT_CAPS, **(caps or {}))
        self._cache: Dict[Tuple[int, Exponents], Fraction] = {}

    def check_caps(self, g: int, points: int, degree: int) -> None:
        """
        Raises:
            BoundExceededError: If a cap or hard limit is exceeded
        """
        for name, value in (("genus", g), ("points", points), ("degree", degree)):
            limit = min(self.caps[name], HARD_LIMITS[name])
            if value > limit:
                raise BoundExceededError(f"topological recursion {name}={value} exceeds cap {limit}")
        if points < 1 or g < 0 or degree < 0:
            raise BoundExceededError(f"need g >= 0, points >= 1, degree >= 0; got ({g}, {points}, {degree})")

    def coefficient(self, g: int, e: Exponents) -> Fraction:
        """[x_1^e_1 ... x_l^e_l] M_g."""
        if g < 0 or not e:
            return Fraction(0)
        key = (g, tuple(e))
        cached = self._cache.get(key)
        if cached is None:
            cached = self._expand(g, key[1])
            self._cache[key] = cached
        return cached

    def _expand(self, g: int, e: Exponents) -> Fraction:
        first, rest = e[0], e[1:]
        value = Fraction(1) if g == 0 and e == (0,) else Fraction(0)

        for a in range(first):
            value += self.coefficient(g - 1, (a, first - 1 - a) + rest)

        for j, exponent in enumerate(rest):
            others = rest[:j] + rest[j + 1:]
            value += (exponent + 1) * self.coefficient(g, (first + exponent + 1,) + others)

        indices = range(len(rest))
        for size in range(len(rest) + 1):
            for chosen in combinations(indices, size):
                inside = tuple(rest[i] for i in chosen)
                outside = tuple(rest[i] for i in indices if i not in chosen)
                for g_left in range(g + 1):
                    for a in range(first):
                        left = self.coefficient(g_left, (a,) + inside)
                        if left:
                            value += left * self.coefficient(g - g_left, (first - 1 - a,) + outside)
        return value

    def mg_table(self, g: int, points: int, degree: int) -> CoeffTable:
        """
        Dense table of M_g(x_1, ..., x_points) to per-variable degree.

        Raises:
            BoundExceededError: If a cap is exceeded
            VerificationFailure: If the table is not symmetric
        """
        self.check_caps(g, points, degree)
        values = {}
        for e in product(range(degree + 1), repeat=points):
            value = self.coefficient(g, e)
            if value:
                values[e] = value
        table = CoeffTable(g, points, degree, values)
        asymmetric = table.asymmetric_entries()
        if asymmetric:
            e = asymmetric[0]
            raise VerificationFailure(
                f"M_{g} table is not symmetric at {e}",
                key=e, expected=table.entry(tuple(sorted(e, reverse=True))), actual=table.entry(e)
            )
        logger.debug("M_%d table with %d points to degree %d: %d nonzero", g, points, degree, len(values))
        return table


def reconcile(
    g: int,
    points: int,
    degree: int,
    engine: Optional[TopologicalRecursion] = None,
    recurrence: Optional[MonotoneRecurrence] = None,
    strict: bool = True
) -> ReconcileReport:
    """
    Compare an M_g table with the recurrence, and genus-zero tables with closed forms.

    Raises:
        VerificationFailure: On the first mismatch when strict
    """
    engine = engine or TopologicalRecursion()
    recurrence = recurrence or MonotoneRecurrence()
    table = engine.mg_table(g, points, degree)
    report = ReconcileReport(g=g, points=points, degree=degree, symmetric=table.is_symmetric())

    def mismatch(e, expected, actual, source):
        message = f"M_{g}{list(e)}: table {actual}, {source} {expected}"
        report.mismatches.append(message)
        if strict:
            raise VerificationFailure(message, key=e, expected=expected, actual=actual)

    for e in product(range(degree + 1), repeat=points):
        alpha = Partition(part + 1 for part in e)
        expected = Fraction(recurrence.H_genus(alpha, g), class_size(alpha))
        report.checked += 1
        if table.entry(e) != expected:
            mismatch(e, expected, table.entry(e), "recurrence")

    if g == 0 and points == 1:
        closed = one_point_closed_form(degree)
        for n in range(degree + 1):
            report.closed_form_checked += 1
            if table.entry((n,)) != closed[n]:
                mismatch((n,), closed[n], table.entry((n,)), "closed form")
    elif g == 0 and points == 2:
        closed = two_point_closed_form(degree)
        for e in product(range(degree + 1), repeat=2):
            report.closed_form_checked += 1
            expected = closed.coefficient(Partition(), 0, e)
            if table.entry(e) != expected:
                mismatch(e, expected, table.entry(e), "closed form")

    logger.info(
        "Reconciled M_%d with %d points to degree %d: %d recurrence, %d closed-form checks",
        g, points, degree, report.checked, report.closed_form_checked
    )
    return report
