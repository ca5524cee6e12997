"""Partitions, permutations and exact arithmetic."""

from fractions import Fraction
from itertools import combinations
from math import factorial

import pytest

from monotone_hurwitz.core.exceptions import (
    ArithmeticPoleError,
    InternalInconsistencyError,
    InvalidPartitionError,
    InvalidPermutationError,
    NoGenusError,
)
from monotone_hurwitz.exact.arithmetic import as_integer, binomial, parse_exact, render_exact, rising
from monotone_hurwitz.exact.partitions import (
    Composition,
    Partition,
    aut_size,
    class_size,
    genus_of,
    partitions_of,
    partitions_up_to,
    rh_transposition_count,
    sub_multisets,
)
from monotone_hurwitz.exact.permutations import (
    Permutation,
    canonical_permutation,
    cycle_type,
    is_transitive,
    permutations_of_type,
)


class TestPartition:
    def test_parse_sorts_parts(self):
        alpha = Partition.parse("1,2")
        assert alpha == Partition((2, 1))
        assert alpha.text() == "2,1"
        assert (alpha.weight, alpha.length) == (3, 2)

    @pytest.mark.parametrize("text", ["a", "2,,1", "2,0", "-1"])
    def test_parse_rejects_bad_input(self, text):
        with pytest.raises(InvalidPartitionError):
            Partition.parse(text)

    def test_input_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            Partition((3, 0))

    def test_remove_missing_part(self):
        with pytest.raises(InvalidPartitionError):
            Partition((2, 1)).remove(3)

    def test_union_and_merge(self):
        assert Partition((2,)).union(3, 1) == Partition((3, 2, 1))
        assert Partition((1,)).merge(Partition((1,))) == Partition((1, 1))

    def test_composition_keeps_order(self):
        composition = Composition((1, 3, 2))
        assert tuple(composition) == (1, 3, 2)
        assert composition.to_partition() == Partition((3, 2, 1))
        with pytest.raises(InvalidPartitionError):
            Composition((1, 0))


class TestEnumeration:
    def test_reverse_lexicographic_order(self):
        assert partitions_of(3) == (Partition((3,)), Partition((2, 1)), Partition((1, 1, 1)))

    def test_partition_counts(self):
        assert [len(partitions_of(d)) for d in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]

    def test_empty_partition(self):
        assert partitions_of(0) == (Partition(),)

    def test_up_to_orders_by_weight(self):
        weights = [alpha.weight for alpha in partitions_up_to(4)]
        assert weights == sorted(weights)
        assert len(weights) == 1 + 2 + 3 + 5

    @pytest.mark.parametrize("d", range(1, 7))
    def test_class_sizes_sum_to_factorial(self, d):
        assert sum(class_size(alpha) for alpha in partitions_of(d)) == factorial(d)

    def test_class_and_aut_sizes(self):
        assert class_size(Partition((2, 1))) == 3
        assert class_size(Partition((3, 1))) == 8
        assert aut_size(Partition((2, 2, 1))) == 2

    @pytest.mark.parametrize("d", range(1, 9))
    def test_sub_multiset_weights(self, d):
        for alpha in partitions_of(d):
            assert sum(weight for _, weight in sub_multisets(alpha)) == 2 ** alpha.length


class TestRiemannHurwitz:
    def test_transposition_count(self):
        assert rh_transposition_count(Partition((2, 1)), 0) == 3
        assert rh_transposition_count(Partition((1, 1)), 1) == 4

    def test_genus_of(self):
        assert genus_of(Partition((2, 1)), 5) == 1

    def test_genus_of_inverts_transposition_count(self):
        for alpha in partitions_up_to(8):
            for g in range(5):
                assert genus_of(alpha, rh_transposition_count(alpha, g)) == g

    @pytest.mark.parametrize("r", [2, 4, 1])
    def test_no_genus(self, r):
        with pytest.raises(NoGenusError):
            genus_of(Partition((2, 1)), r)


class TestArithmetic:
    def test_rising(self):
        assert rising(3, 2) == 12
        assert rising(7, 0) == 1
        assert rising(5, -1) == Fraction(1, 4)
        assert rising(7, -2) == Fraction(1, 30)

    @pytest.mark.parametrize("a", [Fraction(1, 2), Fraction(-5, 3), Fraction(11, 4), Fraction(7)])
    def test_rising_splits_at_any_point(self, a):
        for k in range(-3, 4):
            for j in range(-3, 4):
                assert rising(a, k) * rising(a + k, j) == rising(a, k + j)

    def test_rising_pole(self):
        with pytest.raises(ArithmeticPoleError):
            rising(1, -1)
        with pytest.raises(ZeroDivisionError):
            rising(2, -2)

    def test_binomial_outside_range(self):
        assert binomial(4, 2) == 6
        assert binomial(2, 3) == 0
        assert binomial(3, -1) == 0

    def test_render(self):
        assert render_exact(Fraction(6, 3)) == "2"
        assert render_exact(Fraction(-1, 2)) == "-1/2"
        assert parse_exact("-1/2") == Fraction(-1, 2)

    def test_as_integer(self):
        assert as_integer(Fraction(8, 2)) == 4
        with pytest.raises(InternalInconsistencyError):
            as_integer(Fraction(1, 2))


class TestPermutation:
    def test_left_to_right_product(self):
        a = Permutation.transposition(3, 1, 2)
        b = Permutation.transposition(3, 2, 3)
        # 1 -> 3 -> 2 -> 1
        assert (a * b).cycles() == ((1, 3, 2),)

    def test_inverse(self):
        sigma = Permutation.from_cycles(4, [(1, 2, 3)])
        assert sigma * sigma.inverse() == Permutation.identity(4)

    def test_rank_and_type(self):
        sigma = Permutation.from_cycles(5, [(1, 2, 3), (4, 5)])
        assert cycle_type(sigma) == Partition((3, 2))
        assert sigma.rank() == 3

    def test_invalid_images(self):
        with pytest.raises(InvalidPermutationError):
            Permutation((0, 0, 1))
        with pytest.raises(InvalidPermutationError):
            Permutation.transposition(3, 2, 2)

    def test_canonical_representative(self):
        assert canonical_permutation(Partition((3, 1))).cycles() == ((1, 2, 3), (4,))

    def test_permutations_of_type(self):
        assert len(list(permutations_of_type(Partition((2, 2))))) == 3

    def test_transitivity(self):
        assert is_transitive([Permutation.transposition(3, 1, 2), Permutation.transposition(3, 2, 3)], 3)
        assert not is_transitive([Permutation.transposition(3, 1, 2)], 3)

    @pytest.mark.parametrize("d", range(1, 5))
    def test_transitivity_matches_orbit_search(self, d):
        transpositions = [
            Permutation.transposition(d, a, b) for b in range(2, d + 1) for a in range(1, b)
        ]
        for size in range(len(transpositions) + 1):
            for chosen in combinations(transpositions, size):
                orbit = {0}
                frontier = [0]
                while frontier:
                    point = frontier.pop()
                    for generator in chosen:
                        if generator[point] not in orbit:
                            orbit.add(generator[point])
                            frontier.append(generator[point])
                assert is_transitive(chosen, d) == (len(orbit) == d)
