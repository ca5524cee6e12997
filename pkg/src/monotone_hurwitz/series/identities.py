"""
Coefficientwise residuals of the generating-function identities.

Each function returns LHS - RHS as a series truncated to the caps on which
the identity is exactly testable; a genuine solution gives the zero series.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..exact.partitions import Partition, partitions_of
from ..recurrence.monotone import MonotoneRecurrence
from .builders import (
    build_F,
    build_genus_series,
    build_monotone_series,
    build_tau_series,
    build_classical_series,
    embed,
    q_transform,
    spectral_curve,
    two_point_closed_form,
)
from .operators import (
    cut_operator,
    diff_operator_D,
    join_operator,
    lift,
    project,
    quadratic_operator,
    second_lift,
    split,
)
from .partition_series import Caps, PartitionSeries
from .uni_series import UniSeries

logger = logging.getLogger(__name__)

_SINGLETON = Partition((1,))


@dataclass
class JoinCutResidual:
    """Residual of a join-cut equation, with the t^-1 (initial condition) layer kept apart."""

    series: PartitionSeries
    negative_layer: Dict[Partition, Fraction] = field(default_factory=dict)

    def is_zero(self) -> bool:
        return self.series.is_zero() and not self.negative_layer


def _shift_t_down(series: PartitionSeries) -> Tuple[PartitionSeries, Dict[Partition, Fraction]]:
    """Divide by t: returns the t^{>=0} part and the t^-1 layer separately."""
    negative = {}
    terms = {}
    for (alpha, r, e), c in series.items():
        if r == 0:
            negative[alpha] = c
        else:
            terms[(alpha, r - 1, e)] = c
    caps = series.caps._replace(max_r=max(series.caps.max_r - 1, 0))
    return PartitionSeries(terms, caps, series.slots), negative


def joincut_residual(series: PartitionSeries, mode: str = "monotone") -> JoinCutResidual:
    """
    LHS - RHS of the join-cut equation on t-layers 0..R-1.

    monotone:  (1/2t)(D H - p_1) = 1/2 (cut + join) H + 1/2 Q(H, H)
    classical: dH/dt            = 1/2 (cut + join) H + 1/2 Q(H, H)

    where Q(A, B) = sum ij p_{i+j} dA/dp_i dB/dp_j. The negative layer holds
    the t^-1 part of the monotone left side, or the [t^0] H = p_1 initial
    condition for the classical equation.
    """
    caps = series.caps
    rhs = (cut_operator(series) + join_operator(series) + quadratic_operator(series, series)).scale(Fraction(1, 2))
    rhs = rhs.with_caps(caps._replace(max_r=max(caps.max_r - 1, 0)))

    if mode == "monotone":
        lhs, negative = _shift_t_down(diff_operator_D(series).scale(Fraction(1, 2)))
        negative[_SINGLETON] = negative.get(_SINGLETON, 0) - Fraction(1, 2)
    elif mode == "classical":
        lhs = series.map_terms(
            lambda alpha, r, e, c: iter([((alpha, r - 1, e), c * r)] if r else []),
            caps=caps._replace(max_r=max(caps.max_r - 1, 0))
        )
        negative = {alpha: c for (alpha, r, e), c in series.items() if r == 0}
        negative[_SINGLETON] = negative.get(_SINGLETON, 0) - 1
    else:
        raise ValueError(f"unknown join-cut mode {mode!r}")

    if caps.max_r == 0:
        lhs = PartitionSeries.zero(caps)
        rhs = PartitionSeries.zero(caps)
    residual = lhs - rhs
    return JoinCutResidual(residual, {alpha: c for alpha, c in negative.items() if c})


def exp_formula_check(max_weight: int, max_r: int, mode: str = "monotone") -> PartitionSeries:
    """tau - exp(H); zero when the exponential formula holds."""
    tau = build_tau_series(max_weight, max_r, mode)
    if mode == "monotone":
        connected = build_monotone_series(max_weight, max_r)
    else:
        connected = build_classical_series(max_weight, max_r)
    return tau - connected.exp()


def lift_projection_residual(series: PartitionSeries) -> PartitionSeries:
    """Pi_1 Delta_1 S - D S."""
    return project(lift(series, 1), 1) - diff_operator_D(series)


def split_residual(series: PartitionSeries) -> PartitionSeries:
    """Pi_1 Pi_2 Split_{1->2} Delta_1 S - sum (i+j) p_i p_j d/dp_{i+j} S."""
    composite = project(project(split(lift(series, 1), 1, 2), 2), 1)
    return composite - cut_operator(series)


def genus0_operator_residual(
    max_weight: int,
    max_x: int,
    recurrence: Optional[MonotoneRecurrence] = None
) -> PartitionSeries:
    """
    U - Pi_2 Split_{1->2} U - U^2 - x_1 with U = Delta_1 H_0.

    The split lowers x_1-degree, so U is kept to the full weight and only the
    residual is cut to x-degree <= max_x.
    """
    caps = Caps(max_weight, 0, None)
    lifted = lift(build_genus_series(0, max_weight, recurrence), 1).with_caps(caps)
    x1 = PartitionSeries.monomial(caps, x={1: 1})
    residual = lifted - project(split(lifted, 1, 2), 2) - lifted * lifted - x1
    return residual.with_caps(Caps(max_weight, 0, max_x))


def _sub_partition(alpha: Partition, sub: Partition) -> Optional[Partition]:
    """alpha minus sub, or None if sub is not contained in alpha."""
    remaining = list(alpha)
    for part in sub:
        try:
            remaining.remove(part)
        except ValueError:
            return None
    return Partition(remaining)


def higher_genus_step(
    g: int,
    max_weight: int,
    max_x: int,
    lower: Optional[List[PartitionSeries]] = None,
    recurrence: Optional[MonotoneRecurrence] = None
) -> PartitionSeries:
    """
    Solve U = RHS + 2 U_0 U + Pi_2 Split_{1->2} U for U = Delta_1 H_g, where

        RHS = Delta_1^2 H_{g-1} + sum_{g'=1}^{g-1} Delta_1 H_g' Delta_1 H_{g-g'}

    and U_0 = Delta_1 H_0. U_0 U only involves U at lower total weight and the
    split term only involves U at equal weight and lower p-weight, so
    coefficients are fixed by weight, then by ascending p-weight.

    Args:
        g: Genus, at least 1
        max_weight: Weight cap
        max_x: Catalyst degree cap of the returned series
        lower: Genus series H_0, ..., H_{g-1} (default: built from the recurrence)
    """
    if g < 1:
        raise ValueError("higher_genus_step needs g >= 1")
    caps = Caps(max_weight, 0, max_weight)
    if lower is None:
        lower = [build_genus_series(h, max_weight, recurrence) for h in range(g)]
    lifts = [lift(series, 1).with_caps(caps) for series in lower]

    rhs = second_lift(lower[g - 1], 1).with_caps(caps)
    for h in range(1, g):
        rhs = rhs + lifts[h] * lifts[g - h]

    u0 = list(lifts[0].items())
    solved: Dict[Tuple[Partition, int], Fraction] = {}
    for weight in range(1, max_weight + 1):
        for x_degree in range(weight, -1, -1):
            p_weight = weight - x_degree
            for alpha in partitions_of(p_weight):
                value = rhs.coefficient(alpha, 0, (x_degree,))
                for (alpha0, _, (e0,)), c0 in u0:
                    if e0 > x_degree:
                        continue
                    rest = _sub_partition(alpha, alpha0)
                    if rest is None:
                        continue
                    value += 2 * c0 * solved.get((rest, x_degree - e0), 0)
                if x_degree >= 1:
                    for part in set(alpha):
                        value += solved.get((alpha.remove(part), x_degree + part), 0)
                if value:
                    solved[(alpha, x_degree)] = value

    terms = {(alpha, 0, (e,)): c for (alpha, e), c in solved.items()}
    logger.debug("Genus %d step solved %d coefficients", g, len(terms))
    return PartitionSeries(terms, Caps(max_weight, 0, max_x), (1,))


def f3d_residual(max_weight: int) -> PartitionSeries:
    """(2D-2)(2D-1)(2D) F - ((1-gamma)^3 (1-eta)^-1 - 1)."""
    caps = Caps(max_weight)
    F = build_F(max_weight)
    lhs = F.map_terms(
        lambda alpha, r, e, c: iter([((alpha, r, e), c * (2 * alpha.weight - 2) * (2 * alpha.weight - 1) * 2 * alpha.weight)])
    )
    transform = q_transform(max_weight)
    one = PartitionSeries.one(caps)
    rhs = (one - transform.gamma) ** 3 * (one - transform.eta).power(-1) - one
    return lhs - rhs


def pq_roundtrip_residual(max_weight: int) -> Dict[int, PartitionSeries]:
    """q_j (1 - gamma)^(2j) - p_j for every j; all zero when the inversion is exact."""
    caps = Caps(max_weight)
    transform = q_transform(max_weight)
    base = PartitionSeries.one(caps) - transform.gamma
    return {
        j: qj * base ** (2 * j) - PartitionSeries.monomial(caps, Partition((j,)))
        for j, qj in transform.q.items()
    }


def spectral_two_point_residual(degree: int) -> PartitionSeries:
    """
    M_0(x1, x2) (y1 - 1)(y2 - 1)(x2 - x1)^2 - x1 y1' x2 y2' (x2 y2 - x1 y1)^2
    with y = 1 + x y^2, per-variable degree at most degree.
    """
    caps = Caps(2 * degree, 0, degree)
    y = spectral_curve(degree)
    dy = y.derivative()
    x = UniSeries.variable(degree)
    y1, y2 = embed(y, 1, caps), embed(y, 2, caps)
    dy1, dy2 = embed(dy, 1, caps), embed(dy, 2, caps)
    x1, x2 = embed(x, 1, caps), embed(x, 2, caps)
    one = PartitionSeries.one(caps, (1, 2))
    difference = x2 - x1
    lhs = two_point_closed_form(degree) * (y1 - one) * (y2 - one) * difference * difference
    inner = x2 * y2 - x1 * y1
    rhs = x1 * dy1 * x2 * dy2 * inner * inner
    return lhs - rhs


def genus0_one_point(max_weight: int, recurrence: Optional[MonotoneRecurrence] = None) -> UniSeries:
    """
    M_0(x) read off the genus-zero series: [x^(k-1)] = [x_1^k] Delta_1 H_0.

    These are Catalan numbers.
    """
    lifted = lift(build_genus_series(0, max_weight, recurrence), 1)
    degree = max_weight - 1
    return UniSeries(
        [lifted.coefficient(Partition(), 0, (k,)) for k in range(1, max_weight + 1)],
        degree
    )
