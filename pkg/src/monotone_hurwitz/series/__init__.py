"""Truncated exact generating functions, their operators and identities."""

from .partition_series import Caps, PartitionSeries, load_dump
from .uni_series import UniSeries
from .operators import (
    diff_operator_D,
    dp,
    times_p,
    lift,
    second_lift,
    project,
    split,
    cut_operator,
    join_operator,
    quadratic_operator,
)
from .builders import (
    build_monotone_series,
    build_classical_series,
    build_genus_series,
    build_F,
    build_tau_series,
    recover_from_lift,
    q_transform,
    spectral_curve,
    one_point_closed_form,
    two_point_closed_form,
    closed_form_expansions,
)
from .identities import (
    JoinCutResidual,
    joincut_residual,
    exp_formula_check,
    lift_projection_residual,
    split_residual,
    genus0_operator_residual,
    higher_genus_step,
    f3d_residual,
    pq_roundtrip_residual,
    spectral_two_point_residual,
    genus0_one_point,
)

__all__ = [
    "Caps",
    "PartitionSeries",
    "load_dump",
    "UniSeries",
    "diff_operator_D",
    "dp",
    "times_p",
    "lift",
    "second_lift",
    "project",
    "split",
    "cut_operator",
    "join_operator",
    "quadratic_operator",
    "build_monotone_series",
    "build_classical_series",
    "build_genus_series",
    "build_F",
    "build_tau_series",
    "recover_from_lift",
    "q_transform",
    "spectral_curve",
    "one_point_closed_form",
    "two_point_closed_form",
    "closed_form_expansions",
    "JoinCutResidual",
    "joincut_residual",
    "exp_formula_check",
    "lift_projection_residual",
    "split_residual",
    "genus0_operator_residual",
    "higher_genus_step",
    "f3d_residual",
    "pq_roundtrip_residual",
    "spectral_two_point_residual",
    "genus0_one_point",
]
