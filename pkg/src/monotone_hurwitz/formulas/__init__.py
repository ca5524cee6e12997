"""Closed genus-zero formulas."""

from .closed_form import (
    FORMULAS,
    monotone_genus0,
    monotone_genus0_single_cycle,
    classical_genus0,
    bms_genus0,
    catalan,
    inline_all_ones_claim,
    formula_report,
    discrepancy_records,
)

__all__ = [
    "FORMULAS",
    "monotone_genus0",
    "monotone_genus0_single_cycle",
    "classical_genus0",
    "bms_genus0",
    "catalan",
    "inline_all_ones_claim",
    "formula_report",
    "discrepancy_records",
]
