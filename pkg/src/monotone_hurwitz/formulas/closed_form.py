"""
Closed genus-zero formulas.

Rising products with negative length follow the reciprocal convention of
``exact.arithmetic.rising`` in every formula, including the constellation
count where it is applied to the (l - 2) exponent.
"""

import logging
from fractions import Fraction
from math import factorial, prod
from typing import List, Optional

from ..core.exceptions import InternalInconsistencyError
from ..core.models import DiscrepancyRecord, FormulaReport
from ..exact.arithmetic import as_integer, binomial, rising
from ..exact.partitions import Partition, aut_size, class_size

logger = logging.getLogger(__name__)

FORMULAS = (
    "monotone-genus0",
    "monotone-single-cycle",
    "classical-genus0",
    "bms-genus0",
    "inline-all-ones",
)


def _prefactor(alpha: Partition) -> Fraction:
    return Fraction(factorial(alpha.weight), aut_size(alpha))


def monotone_genus0_value(alpha: Partition) -> Fraction:
    """d!/|Aut alpha| * (2d+1)^(l-3 rising) * prod C(2 a_j, a_j), unchecked."""
    d, length = alpha.weight, alpha.length
    return (
        _prefactor(alpha)
        * rising(2 * d + 1, length - 3)
        * prod(binomial(2 * part, part) for part in alpha)
    )


def monotone_genus0(alpha: Partition) -> int:
    """
    Genus-zero monotone Hurwitz number.

    Raises:
        InternalInconsistencyError: If the formula does not evaluate to an integer
    """
    alpha = Partition(alpha)
    return as_integer(monotone_genus0_value(alpha), f"monotone genus-0 value at {alpha.text()}")


def monotone_genus0_single_cycle(d: int) -> int:
    """
    (2d-2)!/d!, asserted equal to the general formula at (d).

    Raises:
        InternalInconsistencyError: If the two values differ
    """
    value = as_integer(Fraction(factorial(2 * d - 2), factorial(d)), f"(2d-2)!/d! at d={d}")
    general = monotone_genus0(Partition((d,)))
    if value != general:
        raise InternalInconsistencyError(
            f"single-cycle value {value} differs from general formula {general} at d={d}"
        )
    return value


def classical_genus0_value(alpha: Partition) -> Fraction:
    d, length = alpha.weight, alpha.length
    return (
        _prefactor(alpha)
        * factorial(d + length - 2)
        * Fraction(d) ** (length - 3)
        * prod(Fraction(part ** part, factorial(part)) for part in alpha)
    )


def classical_genus0(alpha: Partition) -> int:
    """
    Genus-zero classical Hurwitz number.

    Raises:
        InternalInconsistencyError: If the formula does not evaluate to an integer
    """
    alpha = Partition(alpha)
    return as_integer(classical_genus0_value(alpha), f"classical genus-0 value at {alpha.text()}")


def bms_genus0(alpha: Partition, r: int) -> Fraction:
    """
    Constellation count d!/|Aut alpha| * r * ((r-1)d - l + 2)^(l-2 rising) * prod C(r a_j - 1, a_j).

    Evaluated literally; no integrality is asserted.

    Raises:
        ArithmeticPoleError: If the rising product hits a pole
    """
    alpha = Partition(alpha)
    d, length = alpha.weight, alpha.length
    return (
        _prefactor(alpha)
        * r
        * rising((r - 1) * d - length + 2, length - 2)
        * prod(binomial(r * part - 1, part) for part in alpha)
    )


def catalan(n: int) -> int:
    return binomial(2 * n, n) // (n + 1)


def inline_all_ones_claim(d: int) -> int:
    """(d-1)! 2^(d-1), the claimed all-ones value at alpha = (1^d)."""
    return factorial(d - 1) * 2 ** (d - 1)


def formula_report(
    alpha: Partition,
    formula: str,
    reference: Optional[Fraction] = None,
    r: Optional[int] = None
) -> FormulaReport:
    """
    Evaluate one formula and compare it with an independent value.

    Args:
        alpha: Cycle type
        formula: One of FORMULAS
        reference: Value from another method (enumeration or recurrence)
        r: Factor count, for bms-genus0 only

    Returns:
        FormulaReport; the constellation formula and the inline claim are
        marked "unreconciled" when they disagree with the reference
    """
    alpha = Partition(alpha)
    if formula == "monotone-genus0":
        value = monotone_genus0_value(alpha)
    elif formula == "monotone-single-cycle":
        value = Fraction(monotone_genus0_single_cycle(alpha.weight))
    elif formula == "classical-genus0":
        value = classical_genus0_value(alpha)
    elif formula == "bms-genus0":
        if r is None:
            raise ValueError("bms-genus0 needs r")
        value = bms_genus0(alpha, r)
    elif formula == "inline-all-ones":
        value = Fraction(inline_all_ones_claim(alpha.weight))
    else:
        raise ValueError(f"unknown formula {formula!r}; choose from {', '.join(FORMULAS)}")

    if reference is None:
        status = "unchecked"
    elif value == reference:
        status = "agrees"
    elif formula in ("bms-genus0", "inline-all-ones"):
        status = "unreconciled"
    else:
        status = "disagrees"
    logger.debug("%s at %s: %s (%s)", formula, alpha.text(), value, status)

    return FormulaReport(
        alpha=alpha,
        formula=formula,
        value=value,
        integral=value.denominator == 1,
        reference=reference,
        status=status
    )


# (alpha, r) cases where the constellation formula is compared with enumeration
BMS_CASES = (
    (Partition((1, 1)), 2),
    (Partition((2,)), 2),
    (Partition((2,)), 3),
)

INLINE_CLAIM_DEGREES = (2, 4)


def discrepancy_records(oracle) -> List[DiscrepancyRecord]:
    """
    The known disagreements, with both numbers.

    Args:
        oracle: FactorizationOracle used for the rank-weighted counts

    Returns:
        One DiscrepancyRecord per case, always status "unreconciled"
    """
    records = []
    for d in INLINE_CLAIM_DEGREES:
        alpha = Partition((1,) * d)
        records.append(DiscrepancyRecord(
            label="inline-all-ones",
            alpha=alpha,
            claimed=Fraction(inline_all_ones_claim(d)),
            enumerated=Fraction(monotone_genus0(alpha))
        ))
    for alpha, r in BMS_CASES:
        enumerated = class_size(alpha) * oracle.count_rank_factorizations(alpha, r, 0)
        records.append(DiscrepancyRecord(
            label="bms-genus0",
            alpha=alpha,
            r=r,
            claimed=bms_genus0(alpha, r),
            enumerated=Fraction(enumerated)
        ))
    return records
