"""
Generating functions populated from the counting modules.

Coefficient conventions (z-exponent implicit, equal to |alpha|):

    monotone H      [t^r p_alpha]  = H^r(alpha) / d!
    classical H     [t^r p_alpha]  = H^r(alpha) / (d! r!)
    genus-g H_g     [p_alpha]      = H_g(alpha) / d!
    tau             constant 1 plus the same normalisation on total counts
    F               [p_alpha]      = (2d+1)^(l-3 rising) prod C(2a_j, a_j) / |Aut alpha|
"""

import logging
from fractions import Fraction
from math import factorial, prod
from typing import Dict, List, Literal, NamedTuple, Optional

from ..algebra.group_algebra import (
    class_coefficient,
    class_sum,
    complete_homogeneous_rows,
    multiply,
    GroupAlgebraElement,
)
from ..core.exceptions import VerificationFailure
from ..exact.arithmetic import binomial, rising
from ..exact.partitions import Partition, aut_size, class_size, partitions_of, partitions_up_to
from ..recurrence.classical import ClassicalJoinCut
from ..recurrence.monotone import MonotoneRecurrence
from .operators import project
from .partition_series import Caps, PartitionSeries
from .uni_series import UniSeries

logger = logging.getLogger(__name__)

Mode = Literal["monotone", "classical"]


def build_monotone_series(
    max_weight: int,
    max_r: int,
    recurrence: Optional[MonotoneRecurrence] = None
) -> PartitionSeries:
    """Monotone generating function to weight max_weight and t-degree max_r."""
    recurrence = recurrence or MonotoneRecurrence()
    terms = {}
    for alpha in partitions_up_to(max_weight):
        for r in range(max_r + 1):
            value = recurrence.H(alpha, r)
            if value:
                terms[(alpha, r, ())] = Fraction(value, factorial(alpha.weight))
    return PartitionSeries(terms, Caps(max_weight, max_r))


def build_classical_series(
    max_weight: int,
    max_r: int,
    joincut: Optional[ClassicalJoinCut] = None
) -> PartitionSeries:
    """Classical generating function, t exponential."""
    joincut = joincut or ClassicalJoinCut()
    joincut.ensure(max_weight, max_r)
    terms = {}
    for r in range(max_r + 1):
        for alpha, value in joincut.layers[r].items():
            terms[(alpha, r, ())] = value
    return PartitionSeries(terms, Caps(max_weight, max_r))


def build_genus_series(
    g: int,
    max_weight: int,
    recurrence: Optional[MonotoneRecurrence] = None
) -> PartitionSeries:
    """H_g = sum_alpha H_g(alpha) p_alpha / d!, no t."""
    recurrence = recurrence or MonotoneRecurrence()
    terms = {}
    for alpha, value in recurrence.genus_table(g, max_weight).items():
        if value:
            terms[(alpha, 0, ())] = Fraction(value, factorial(alpha.weight))
    return PartitionSeries(terms, Caps(max_weight))


def build_F(max_weight: int) -> PartitionSeries:
    """The genus-zero series F; d! [p_alpha] F is the genus-zero monotone number."""
    terms = {}
    for alpha in partitions_up_to(max_weight):
        terms[(alpha, 0, ())] = (
            Fraction(1, aut_size(alpha))
            * rising(2 * alpha.weight + 1, alpha.length - 3)
            * prod(binomial(2 * part, part) for part in alpha)
        )
    return PartitionSeries(terms, Caps(max_weight))


def _transposition_powers(d: int, max_r: int) -> List[GroupAlgebraElement]:
    """(sum of all transpositions)^r for r = 0..max_r."""
    unit = GroupAlgebraElement.unit(d)
    if d == 1:
        return [unit] + [GroupAlgebraElement.zero(1)] * max_r
    transpositions = class_sum(Partition((2,) + (1,) * (d - 2)))
    powers = [unit]
    for _ in range(max_r):
        powers.append(multiply(powers[-1], transpositions))
    return powers


def build_tau_series(max_weight: int, max_r: int, mode: Mode = "monotone", jm_d_max: int = 8) -> PartitionSeries:
    """
    Generating function of all (not necessarily transitive) factorizations.

    Monotone totals are class coefficients of h_r(J_1, ..., J_d); classical
    totals are class coefficients of the r-th power of the transposition
    class sum, with t exponential.
    """
    caps = Caps(max_weight, max_r)
    terms = {(Partition(), 0, ()): Fraction(1)}
    for d in range(1, max_weight + 1):
        if mode == "monotone":
            rows = complete_homogeneous_rows(d, max_r, jm_d_max)
        else:
            rows = _transposition_powers(d, max_r)
        for r, element in enumerate(rows):
            for alpha in partitions_of(d):
                total = class_coefficient(element, alpha, check=False)
                if not total:
                    continue
                value = Fraction(class_size(alpha) * total, factorial(d))
                if mode == "classical":
                    value /= factorial(r)
                terms[(alpha, r, ())] = value
    logger.debug("Built %s tau series with %d terms", mode, len(terms))
    return PartitionSeries(terms, caps)


def recover_from_lift(lifted: PartitionSeries) -> PartitionSeries:
    """
    H_g from Delta_1 H_g: [p_alpha] Pi_1 Delta_1 H_g = d [p_alpha] H_g.

    The recovered series has zero constant term.
    """
    projected = project(lifted, 1)
    return projected.map_terms(
        lambda alpha, r, e, c: iter([((alpha, r, e), c / alpha.weight)] if alpha.weight else [])
    )


class QTransform(NamedTuple):
    """q_j as series in p, with gamma and eta composed into p."""

    q: Dict[int, PartitionSeries]
    gamma: PartitionSeries
    eta: PartitionSeries


def _gamma_eta(q: Dict[int, PartitionSeries], caps: Caps):
    gamma = PartitionSeries.zero(caps)
    eta = PartitionSeries.zero(caps)
    for k, qk in q.items():
        gamma = gamma + qk.scale(binomial(2 * k, k))
        eta = eta + qk.scale((2 * k + 1) * binomial(2 * k, k))
    return gamma, eta


def q_transform(max_weight: int) -> QTransform:
    """
    Solve q_j = p_j (1 - gamma)^(-2j) by fixed-point iteration.

    Every pass fixes one more weight, so max_weight passes suffice.
    """
    caps = Caps(max_weight)
    one = PartitionSeries.one(caps)
    p = {j: PartitionSeries.monomial(caps, Partition((j,))) for j in range(1, max_weight + 1)}
    q = dict(p)
    for _ in range(max_weight):
        gamma, _ = _gamma_eta(q, caps)
        base = one - gamma
        q = {j: p[j] * base.power(-2 * j) for j in p}
    gamma, eta = _gamma_eta(q, caps)
    return QTransform(q, gamma, eta)


def spectral_curve(degree: int) -> UniSeries:
    """y = 1 + x y^2 solved by iteration."""
    y = UniSeries.constant(1, degree)
    for _ in range(degree + 1):
        y = 1 + (y * y).shift(1)
    return y


def one_point_closed_form(degree: int) -> UniSeries:
    """M_0(x) = (1 - sqrt(1 - 4x)) / (2x)."""
    root = (1 - UniSeries.variable(degree + 1) * 4).sqrt()
    return ((1 - root).shift(-1) * Fraction(1, 2))


def embed(series: UniSeries, slot: int, caps: Caps) -> PartitionSeries:
    """A series in x_slot as a catalyst series with empty partition."""
    terms = {(Partition(), 0, (n,)): c for n, c in enumerate(series.coefficients)}
    return PartitionSeries(terms, caps, (slot,))


def two_point_closed_form(degree: int) -> PartitionSeries:
    """
    M_0(x_1, x_2) = 4 / (s_1 s_2 (s_1 + s_2)^2) with s_i = sqrt(1 - 4 x_i),
    per-variable degree at most degree.
    """
    caps = Caps(2 * degree, 0, degree)
    root = (1 - UniSeries.variable(degree) * 4).sqrt()
    s1, s2 = embed(root, 1, caps), embed(root, 2, caps)
    half_sum = (s1 + s2).scale(Fraction(1, 2))
    return (s1 * s2 * half_sum * half_sum).power(-1)


class ClosedFormExpansions(NamedTuple):
    one_point: UniSeries
    two_point: PartitionSeries
    spectral: UniSeries


def closed_form_expansions(degree: int) -> ClosedFormExpansions:
    """
    Expand the genus-zero closed forms and check the spectral curve.

    Raises:
        VerificationFailure: If the spectral-curve solution differs from M_0(x)
    """
    one_point = one_point_closed_form(degree)
    spectral = spectral_curve(degree)
    if one_point != spectral:
        mismatch = next(n for n in range(degree + 1) if one_point[n] != spectral[n])
        raise VerificationFailure(
            f"spectral curve and closed form differ at x^{mismatch}",
            key=mismatch, expected=one_point[mismatch], actual=spectral[mismatch]
        )
    return ClosedFormExpansions(one_point, two_point_closed_form(degree), spectral)
