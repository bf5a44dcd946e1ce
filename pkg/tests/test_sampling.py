"""
Tests for random partitions and the seeded spot-check.
"""

import numpy as np
import pytest

from core.decomp import SpotcheckSummary, random_partition, run_spotcheck
from core.matroids import BinaryMatroid


class TestRandomPartition:
    def test_covers_the_ground_set(self, fano):
        partition = random_partition(fano, np.random.default_rng(7))
        assert sorted(e for part in partition.parts for e in part) == list(fano.ground)

    def test_respects_the_part_cap(self):
        m = BinaryMatroid(4)
        rng = np.random.default_rng(0)
        for _ in range(50):
            partition = random_partition(m, rng, 3)
            assert max(len(p) for p in partition.parts) <= 3

    def test_same_seed_same_partition(self, fano):
        first = random_partition(fano, np.random.default_rng(42), 3)
        second = random_partition(fano, np.random.default_rng(42), 3)
        assert first == second


class TestSpotcheck:
    @pytest.mark.parametrize("c", [1, 2])
    def test_no_violations(self, c):
        summary = run_spotcheck(4, 1, c, 1000, seed=2024)
        assert summary.samples == 1000
        assert summary.refused == 0
        assert summary.violations == 0

    @pytest.mark.parametrize("n", [2, 3])
    def test_small_dimensions(self, n):
        summary = run_spotcheck(n, 1, 2, 100, seed=n)
        assert summary.violations == 0
        assert summary.witnesses <= summary.samples - summary.valid

    def test_seed_determines_the_summary(self):
        assert run_spotcheck(3, 1, 1, 50, seed=9) == run_spotcheck(3, 1, 1, 50, seed=9)

    def test_workers_do_not_change_the_summary(self):
        assert run_spotcheck(3, 1, 2, 30, seed=5, workers=1) == run_spotcheck(3, 1, 2, 30, seed=5, workers=4)

    def test_budget_refusals_are_counted(self):
        summary = run_spotcheck(4, 1, 1, 5, seed=1, budget=3)
        assert summary.refused == 5
        assert summary.violations == 0

    def test_summary_dict(self):
        summary = SpotcheckSummary(n=3, b=1, c=1, seed=0, samples=4, capacity_exceeded=1)
        data = summary.to_dict()
        assert data["violations"] == 1
        assert data["samples"] == 4
