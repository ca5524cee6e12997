"""Brute-force enumeration, sequential and parallel."""

from concurrent.futures import ThreadPoolExecutor

import pytest

from monotone_hurwitz.core.exceptions import BoundExceededError, ComputationError, InputError
from monotone_hurwitz.core.models import EnumerationBounds, FactorizationMode, FactorizationQuery
from monotone_hurwitz.exact.partitions import Partition, partitions_up_to, rh_transposition_count
from monotone_hurwitz.oracle import FactorizationOracle, ParallelOracle, factor_table


class TestFactorTables:
    def test_monotone_keys_follow_larger_point(self):
        keys = [factor.key for factor in factor_table(FactorizationMode.MONOTONE, 4)]
        assert keys == sorted(keys)
        assert len(keys) == 6

    def test_rank_weighted_uses_whole_group(self):
        factors = factor_table(FactorizationMode.RANK_WEIGHTED, 3)
        assert len(factors) == 6
        assert sorted(factor.rank for factor in factors) == [0, 1, 1, 1, 2, 2]


class TestMonotoneCounts:
    @pytest.mark.parametrize("alpha,r,expected", [
        ((1,), 0, 1),
        ((2,), 1, 1),
        ((1, 1), 2, 1),
        ((3,), 2, 2),
        ((2, 1), 3, 4),
        ((1, 1, 1), 4, 8),
    ])
    def test_small_counts(self, oracle, alpha, r, expected):
        assert oracle.count_monotone(Partition(alpha), r) == expected

    def test_parity_obstruction(self, oracle):
        assert oracle.count_monotone(Partition((2, 1)), 2) == 0

    def test_non_transitive_totals(self, oracle):
        identity = Partition((1, 1, 1))
        assert oracle.count_monotone(identity, 0, transitive_only=False) == 1
        assert oracle.count_monotone(identity, 0) == 0
        # (12)(12), (13)(13), (23)(23)
        assert oracle.count_monotone(identity, 2, transitive_only=False) == 3

    def test_class_independence(self, oracle):
        assert oracle.class_independence_check(Partition((2, 1)), 3)
        assert oracle.class_independence_check(Partition((2, 2)), 4)

    @pytest.mark.slow
    def test_class_independence_sweep(self, oracle):
        for alpha in partitions_up_to(5):
            for r in range(7):
                assert oracle.class_independence_check(alpha, r), (alpha, r)

    def test_genus_two_identity_count(self, oracle):
        assert oracle.count_monotone(Partition((1, 1, 1, 1, 1)), 12) == 2350848

    def test_parity_and_order_sweep(self, oracle):
        for alpha in partitions_up_to(5):
            floor = rh_transposition_count(alpha, 0)
            for r in range(9):
                monotone = oracle.count_monotone(alpha, r)
                classical = oracle.count_classical(alpha, r)
                assert monotone <= classical
                if r < floor or (r - floor) % 2:
                    assert monotone == 0 and classical == 0, (alpha, r)


class TestOtherModes:
    def test_classical_counts(self, oracle):
        assert oracle.count_classical(Partition((3,)), 2) == 3
        assert oracle.count_classical(Partition((2, 1)), 3) == 8

    def test_rank_weighted_admits_identity_factors(self, oracle):
        assert oracle.count_rank_factorizations(Partition((2,)), 2, 0) == 2
        assert oracle.count_rank_factorizations(Partition((1, 1)), 2, 0) == 1
        assert oracle.count_rank_factorizations(Partition((2,)), 3, 0) == 3

    def test_rank_weighted_needs_genus(self, oracle):
        query = FactorizationQuery(alpha=(2,), r=2, mode=FactorizationMode.RANK_WEIGHTED)
        with pytest.raises(InputError):
            oracle.count(query)


class TestBounds:
    def test_degree_bound(self):
        oracle = FactorizationOracle(EnumerationBounds(monotone_d_max=3))
        with pytest.raises(BoundExceededError):
            oracle.count_monotone(Partition((2, 2)), 4)

    def test_r_bound(self):
        oracle = FactorizationOracle(EnumerationBounds(classical_r_max=2))
        with pytest.raises(BoundExceededError):
            oracle.count_classical(Partition((2, 1)), 3)

    def test_query_rejects_empty_partition(self):
        with pytest.raises(ValueError):
            FactorizationQuery(alpha=(), r=0)


class TestParallelOracle:
    @pytest.mark.asyncio
    async def test_matches_sequential(self, oracle):
        query = FactorizationQuery(alpha=(2, 2), r=4)
        with ThreadPoolExecutor(max_workers=2) as executor:
            parallel = await ParallelOracle(oracle, workers=2).count(query, executor=executor)
        assert parallel == oracle.count(query)

    @pytest.mark.asyncio
    async def test_progress_reports_every_branch(self, oracle):
        query = FactorizationQuery(alpha=(3,), r=2)
        seen = []
        with ThreadPoolExecutor(max_workers=2) as executor:
            total = await ParallelOracle(oracle, workers=2).count(
                query, executor=executor, progress_callback=lambda done, n: seen.append((done, n))
            )
        assert total == 2
        assert seen[-1] == (3, 3)

    @pytest.mark.asyncio
    async def test_zero_factors_fall_back(self, oracle):
        query = FactorizationQuery(alpha=(1,), r=0)
        assert await ParallelOracle(oracle).count(query) == 1

    @pytest.mark.asyncio
    async def test_branch_failure_is_reported(self, oracle, mocker):
        mocker.patch("monotone_hurwitz.oracle.parallel.count_branch", side_effect=RuntimeError("boom"))
        query = FactorizationQuery(alpha=(3,), r=2)
        with ThreadPoolExecutor(max_workers=1) as executor:
            with pytest.raises(ComputationError, match="boom"):
                await ParallelOracle(oracle, workers=1).count(query, executor=executor)
