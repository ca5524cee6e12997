"""Truncated series, catalyst operators, builders and identity residuals."""

from fractions import Fraction

import pytest

from monotone_hurwitz.core.exceptions import SeriesPreconditionError, SlotMisuseError
from monotone_hurwitz.exact.partitions import Partition
from monotone_hurwitz.formulas import catalan
from monotone_hurwitz.series import (
    Caps,
    PartitionSeries,
    UniSeries,
    build_F,
    build_classical_series,
    build_genus_series,
    build_monotone_series,
    closed_form_expansions,
    cut_operator,
    diff_operator_D,
    exp_formula_check,
    f3d_residual,
    genus0_one_point,
    genus0_operator_residual,
    higher_genus_step,
    joincut_residual,
    lift,
    lift_projection_residual,
    load_dump,
    pq_roundtrip_residual,
    project,
    q_transform,
    recover_from_lift,
    spectral_curve,
    spectral_two_point_residual,
    split,
    split_residual,
    two_point_closed_form,
)

CAPS = Caps(4, 4)


def p(*parts, r=0, c=1, caps=CAPS):
    return PartitionSeries.monomial(caps, Partition(parts), r=r, coefficient=c)


class TestPartitionSeries:
    def test_product_merges_partitions(self):
        product = (p(1) + p(2)) * p(1)
        assert product.coefficient(Partition((1, 1))) == 1
        assert product.coefficient(Partition((2, 1))) == 1
        assert len(product) == 2

    def test_product_truncates_by_weight_and_t(self):
        assert (p(3) * p(2)).is_zero()
        assert (p(1, r=3) * p(1, r=2)).is_zero()

    def test_zero_coefficients_are_dropped(self):
        assert (p(2) - p(2)).is_zero()

    def test_exp_log_round_trip(self):
        sample = p(1) + p(2, r=1, c=3) + p(1, 1, r=2, c=Fraction(-1, 2))
        assert sample.exp().log() == sample

    def test_exp_of_single_variable(self):
        # exp(p_1) = sum p_1^n / n!
        result = p(1).exp()
        assert result.coefficient(Partition((1, 1, 1))) == Fraction(1, 6)
        assert result.constant_term() == 1

    def test_rational_power(self):
        base = PartitionSeries.one(CAPS) + p(1, c=4)
        root = base.power(Fraction(1, 2))
        assert root * root == base

    def test_preconditions(self):
        with pytest.raises(SeriesPreconditionError):
            PartitionSeries.one(CAPS).exp()
        with pytest.raises(SeriesPreconditionError):
            p(1).log()

    def test_slots_must_match_exponents(self):
        with pytest.raises(SlotMisuseError):
            PartitionSeries({(Partition(), 0, (1, 2)): 1}, CAPS, (1,))

    def test_dump_and_load(self):
        series = p(2, r=1, c=Fraction(1, 2))
        text = series.dump()
        assert text == '{"alpha":[2],"r":1,"x":[],"c":"1/2"}\n'
        assert load_dump(text, CAPS) == series

    def test_dump_with_catalyst(self):
        series = PartitionSeries.monomial(Caps(4), Partition((1,)), x={1: 2}, coefficient=3)
        assert load_dump(series.dump(), Caps(4), (1,)) == series


class TestUniSeries:
    def test_sqrt(self):
        root = (1 - UniSeries.variable(4) * 4).sqrt()
        assert list(root.coefficients) == [1, -2, -2, -4, -10]

    def test_sqrt_of_square(self):
        base = 1 + UniSeries.variable(5)
        assert (base * base).sqrt() == base

    def test_inverse(self):
        geometric = (1 - UniSeries.variable(4)).inverse()
        assert list(geometric.coefficients) == [1, 1, 1, 1, 1]

    def test_preconditions(self):
        with pytest.raises(SeriesPreconditionError):
            UniSeries.variable(3).inverse()
        with pytest.raises(SeriesPreconditionError):
            UniSeries([2, 1], 3).sqrt()


class TestOperators:
    def test_D_scales_by_weight(self):
        assert diff_operator_D(p(2, 1)) == p(2, 1, c=3)

    def test_D_k_scales_by_multiplicity(self):
        assert diff_operator_D(p(2, 1, 1), 1) == p(2, 1, 1, c=2)

    def test_lift_of_genus_zero(self, recurrence):
        lifted = lift(build_genus_series(0, 2, recurrence), 1)
        caps = Caps(2)
        expected = (
            PartitionSeries.monomial(caps, x={1: 1})
            + PartitionSeries.monomial(caps, x={1: 2})
            + PartitionSeries.monomial(caps, Partition((1,)), x={1: 1})
        )
        assert lifted == expected

    def test_lift_needs_free_slot(self):
        lifted = lift(p(2), 1)
        with pytest.raises(SlotMisuseError):
            lift(lifted, 1)

    def test_project_is_identity_on_unused_slot(self):
        series = p(2, 1)
        assert project(series, 3) is series

    def test_project_forgets_the_mark(self):
        assert project(lift(p(3), 1), 1) == p(3, c=3)

    def test_project_is_idempotent(self, recurrence):
        marked = split(lift(build_genus_series(0, 4, recurrence), 1), 1, 2)
        for slot in (1, 2):
            once = project(marked, slot)
            assert project(once, slot) == once

    def test_split_annihilates_free_terms(self):
        series = PartitionSeries.monomial(Caps(4), Partition((2,)), x={1: 0})
        assert split(series, 1, 2).is_zero()

    def test_split_distributes_exponent(self):
        series = PartitionSeries.monomial(Caps(4), x={1: 3})
        result = split(series, 1, 2)
        assert result.slots == (1, 2)
        assert result.coefficient(Partition(), 0, (2, 1)) == 1
        assert result.coefficient(Partition(), 0, (1, 2)) == 1
        assert len(result) == 2

    def test_split_slot_misuse(self):
        with pytest.raises(SlotMisuseError):
            split(p(2), 1, 2)
        with pytest.raises(SlotMisuseError):
            split(PartitionSeries.monomial(Caps(4), x={1: 1, 2: 1}), 1, 2)

    def test_cut_operator(self):
        # (2) -> 2 p_1 p_1
        assert cut_operator(p(2)) == p(1, 1, c=2)


class TestBuilders:
    def test_monotone_coefficient(self, recurrence):
        series = build_monotone_series(3, 3, recurrence)
        assert series.coefficient(Partition((2,)), 1) == Fraction(1, 2)
        assert series.coefficient(Partition((2, 1)), 3) == 2

    def test_F(self):
        assert build_F(3).coefficient(Partition((2, 1))) == 2

    def test_recover_from_lift(self, recurrence):
        genus1 = build_genus_series(1, 4, recurrence)
        assert recover_from_lift(lift(genus1, 1)) == genus1

    def test_q_transform(self):
        q1 = q_transform(3).q[1]
        assert q1.coefficient(Partition((1,))) == 1
        assert q1.coefficient(Partition((1, 1))) == 4

    def test_spectral_curve_is_catalan(self):
        assert list(spectral_curve(5).coefficients) == [catalan(n) for n in range(6)]

    def test_two_point_closed_form(self):
        table = two_point_closed_form(3)
        assert table.coefficient(Partition(), 0, (0, 0)) == 1
        assert table.coefficient(Partition(), 0, (1, 0)) == 4
        assert table.coefficient(Partition(), 0, (0, 1)) == 4

    def test_closed_form_expansions(self):
        expansions = closed_form_expansions(5)
        assert expansions.one_point == expansions.spectral
        assert expansions.one_point[4] == 14


class TestIdentities:
    def test_monotone_join_cut(self, recurrence):
        residual = joincut_residual(build_monotone_series(5, 6, recurrence), "monotone")
        assert residual.is_zero()

    def test_classical_join_cut(self):
        residual = joincut_residual(build_classical_series(4, 5), "classical")
        assert residual.is_zero()

    def test_corrupted_series_is_caught(self, recurrence):
        series = build_monotone_series(4, 4, recurrence) + p(2, 1, r=3)
        residual = joincut_residual(series, "monotone")
        assert not residual.is_zero()

    def test_unknown_mode(self, recurrence):
        with pytest.raises(ValueError):
            joincut_residual(build_monotone_series(2, 2, recurrence), "other")

    def test_exponential_formula(self):
        assert exp_formula_check(4, 5, "monotone").is_zero()
        assert exp_formula_check(4, 4, "classical").is_zero()

    def test_lift_projection_and_split(self, recurrence):
        genus0 = build_genus_series(0, 5, recurrence)
        assert lift_projection_residual(genus0).is_zero()
        assert split_residual(genus0).is_zero()

    def test_genus_zero_operator_equation(self, recurrence):
        assert genus0_operator_residual(5, 5, recurrence).is_zero()

    @pytest.mark.parametrize("max_x", [0, 1, 3])
    def test_genus_zero_operator_equation_below_weight(self, recurrence, max_x):
        assert genus0_operator_residual(6, max_x, recurrence).is_zero()

    def test_genus_one_step(self, recurrence):
        lower = [build_genus_series(0, 4, recurrence)]
        solved = higher_genus_step(1, 4, 4, lower)
        assert solved == lift(build_genus_series(1, 4, recurrence), 1)

    def test_genus_step_needs_positive_genus(self):
        with pytest.raises(ValueError):
            higher_genus_step(0, 3, 3)

    def test_f_equation(self):
        assert f3d_residual(4).is_zero()

    @pytest.mark.slow
    def test_f_equation_at_weight_six(self):
        assert f3d_residual(6).is_zero()

    @pytest.mark.slow
    def test_join_cut_at_full_caps(self, recurrence):
        assert joincut_residual(build_monotone_series(6, 10, recurrence), "monotone").is_zero()
        assert joincut_residual(build_classical_series(6, 10), "classical").is_zero()

    def test_pq_round_trip(self):
        residuals = pq_roundtrip_residual(4)
        assert sorted(residuals) == [1, 2, 3, 4]
        assert all(residual.is_zero() for residual in residuals.values())

    def test_spectral_two_point(self):
        assert spectral_two_point_residual(4).is_zero()

    def test_one_point_catalan(self, recurrence):
        one_point = genus0_one_point(5, recurrence)
        assert [one_point[n] for n in range(5)] == [catalan(n) for n in range(5)]
