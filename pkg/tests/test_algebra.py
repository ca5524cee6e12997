"""Group algebra of S_d and Jucys-Murphy elements."""

import pytest

from monotone_hurwitz.algebra import (
    GroupAlgebraElement,
    centrality_check,
    class_coefficient,
    class_sum,
    complete_homogeneous_jm,
    complete_homogeneous_rows,
    jm_element,
    multiply,
    permutation_at,
    rank_of,
)
from monotone_hurwitz.core.exceptions import BoundExceededError, InputError, NonCentralElementError
from monotone_hurwitz.exact.partitions import Partition, partitions_of
from monotone_hurwitz.exact.permutations import Permutation, all_permutations


class TestRanking:
    @pytest.mark.parametrize("d", [1, 3, 4])
    def test_rank_is_lexicographic_position(self, d):
        for position, sigma in enumerate(all_permutations(d)):
            assert rank_of(sigma) == position
            assert permutation_at(d, position) == sigma


class TestProducts:
    def test_unit_is_neutral(self):
        e = jm_element(4, 3)
        unit = GroupAlgebraElement.unit(4)
        assert multiply(unit, e) == e
        assert multiply(e, unit) == e

    def test_product_composes_left_to_right(self):
        a = Permutation.transposition(3, 1, 2)
        b = Permutation.transposition(3, 2, 3)
        product = GroupAlgebraElement.from_terms(3, {a: 1}) * GroupAlgebraElement.from_terms(3, {b: 1})
        assert dict(product.support()) == {a * b: 1}

    def test_transposition_class_squared(self):
        square = class_sum(Partition((2, 1))) * class_sum(Partition((2, 1)))
        assert square.coefficient(Permutation.identity(3)) == 3
        assert class_coefficient(square, Partition((3,))) == 3

    def test_degree_mismatch(self):
        with pytest.raises(InputError):
            GroupAlgebraElement.unit(2) + GroupAlgebraElement.unit(3)


class TestJucysMurphy:
    def test_support(self):
        support = dict(jm_element(3, 3).support())
        assert set(support) == {Permutation.transposition(3, 1, 3), Permutation.transposition(3, 2, 3)}

    def test_first_element_is_zero(self):
        assert jm_element(3, 1) == GroupAlgebraElement.zero(3)

    @pytest.mark.parametrize("d", range(2, 7))
    def test_elements_commute(self, d):
        for i in range(1, d + 1):
            for j in range(i + 1, d + 1):
                a, b = jm_element(d, i), jm_element(d, j)
                assert multiply(a, b) == multiply(b, a), (i, j)

    def test_index_out_of_range(self):
        with pytest.raises(InputError):
            jm_element(3, 4)

    def test_single_element_is_not_central(self):
        element = jm_element(3, 2)
        assert not centrality_check(element)
        with pytest.raises(NonCentralElementError):
            class_coefficient(element, Partition((2, 1)))

    @pytest.mark.parametrize("d", range(1, 6))
    def test_h_r_is_central(self, d):
        for element in complete_homogeneous_rows(d, 4):
            assert centrality_check(element)

    def test_h_2_identity_coefficient(self):
        # J_2^2 contributes 1, J_3^2 contributes 2
        assert class_coefficient(complete_homogeneous_jm(3, 2), Partition((1, 1, 1))) == 3

    def test_sum_of_jm_elements_is_transposition_class(self):
        assert complete_homogeneous_jm(4, 1) == class_sum(Partition((2, 1, 1)))

    @pytest.mark.parametrize("d", range(1, 5))
    def test_totals_match_enumeration(self, oracle, d):
        rows = complete_homogeneous_rows(d, 4)
        for r, element in enumerate(rows):
            for alpha in partitions_of(d):
                assert class_coefficient(element, alpha) == oracle.count_monotone(alpha, r, transitive_only=False)

    def test_cap(self):
        with pytest.raises(BoundExceededError):
            complete_homogeneous_jm(6, 2, d_max=5)
