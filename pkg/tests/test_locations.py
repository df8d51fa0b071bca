"""Tests for location extraction and the local-maxima scan."""

import numpy as np
import pytest

from conftest import path_from_values
from locations import (
    LocalMaxCloud,
    LocalMaxPoint,
    LocationSample,
    SparseMax,
    argmax_location,
    extract_local_maxima,
    largest_drawdown_location,
    largest_jump_location,
    psi_transform,
    scan_local_maxima,
)
from simulation import GridSpec, SimSpec, gen_path
from utils.errors import CensoredPointError, DomainError


def _naive_returns(values, i):
    left = next((j for j in range(i - 1, -1, -1) if values[j] >= values[i]), -1)
    right = next((j for j in range(i + 1, values.size) if values[j] >= values[i]), -1)
    return left, right


class TestArgmaxLocation:

    def test_leftmost_maximum(self):
        sample = argmax_location(path_from_values([0.0, 2.0, 2.0, 1.0], 0.0, 1.0))
        assert sample.value == pytest.approx(1.0 / 3.0)
        assert sample.kind == 'supremum'
        assert sample.is_interior

    def test_boundary_flags(self):
        at_zero = argmax_location(path_from_values([0.0, -1.0, -2.0, -3.0], 0.0, 1.0))
        assert at_zero.at_zero and not at_zero.at_one and at_zero.value == 0.0
        at_one = argmax_location(path_from_values([0.0, 1.0, 2.0, 3.0], 0.0, 1.0))
        assert at_one.at_one and at_one.value == 1.0

    def test_sub_interval_is_rescaled(self):
        # grid -1, -0.5, ..., 2; maximum inside [0, 1] at t = 0.5
        values = [0.0, 5.0, 1.0, 3.0, 2.0, 2.0, 9.0]
        sample = argmax_location(path_from_values(values, -1.0, 2.0), (0.0, 1.0))
        assert sample.value == pytest.approx(0.5)
        assert sample.is_interior

    def test_uncovered_interval(self):
        with pytest.raises(DomainError):
            argmax_location(path_from_values([0.0, 1.0, 0.5], 0.0, 1.0), (0.5, 2.0))


class TestJumpLocations:

    def test_largest_jump(self):
        path = path_from_values([0.0, 1.0, 0.5, 3.0], 0.0, 1.0)
        sample = largest_jump_location(path)
        assert sample.value == pytest.approx(1.0)
        assert sample.is_interior
        assert sample.kind == 'largest_jump'

    def test_end_cells_carry_no_boundary_mass(self):
        first = largest_jump_location(path_from_values([0.0, 5.0, 5.1, 5.0], 0.0, 1.0))
        assert first.value == pytest.approx(1.0 / 3.0)
        assert first.at_boundary == (False, False)
        last = largest_jump_location(path_from_values([0.0, 0.1, 0.0, 5.0], 0.0, 1.0))
        assert last.value == pytest.approx(1.0)
        assert last.at_boundary == (False, False)
        drop = largest_drawdown_location(path_from_values([0.0, -4.0, -3.9, -4.0], 0.0, 1.0))
        assert drop.value == pytest.approx(1.0 / 3.0)
        assert drop.is_interior

    def test_largest_absolute_jump_can_be_downward(self):
        path = path_from_values([0.0, 1.0, -3.0, -2.5], 0.0, 1.0)
        assert largest_jump_location(path).value == pytest.approx(2.0 / 3.0)

    def test_largest_drawdown(self):
        path = path_from_values([0.0, 1.0, 0.5, 3.0], 0.0, 1.0)
        sample = largest_drawdown_location(path)
        assert sample.value == pytest.approx(2.0 / 3.0)
        assert sample.is_interior


class TestLocationSample:

    def test_validation(self):
        with pytest.raises(DomainError):
            LocationSample(1.5, 'supremum')
        with pytest.raises(DomainError):
            LocationSample(0.5, 'median')

    def test_dict_round_trip(self):
        sample = LocationSample(0.25, 'largest_jump', at_one=False)
        again = LocationSample.from_dict(sample.to_dict())
        assert again.to_dict() == sample.to_dict()


class TestSparseMax:

    @pytest.mark.parametrize('seed', [0, 1, 2])
    def test_matches_naive_scan(self, seed):
        rng = np.random.default_rng(seed)
        values = rng.integers(0, 6, size=97).astype(float)
        table = SparseMax(values)
        idx = np.arange(values.size)
        left = table.left_return(idx)
        right = table.right_return(idx)
        for i in idx:
            assert (left[i], right[i]) == _naive_returns(values, i)


class TestLocalMaxima:

    def test_worked_example(self):
        points = extract_local_maxima(path_from_values([0.0, 2.0, 1.0, 3.0, 0.0]))
        assert len(points) == 2
        first, second = points
        assert (first.s, first.l, first.r) == (1.0, 1.0, 2.0)
        assert first.l_censored and not first.r_censored
        assert (second.s, second.l, second.r) == (3.0, 3.0, 1.0)
        assert second.l_censored and second.r_censored

    def test_csv_rows(self):
        cloud = scan_local_maxima(path_from_values([0.0, 2.0, 1.0, 3.0, 0.0]))
        assert LocalMaxCloud.COLUMNS == ('s', 'l', 'l_censored', 'r', 'r_censored')
        assert cloud.to_rows() == [(1.0, 1.0, 1, 2.0, 0), (3.0, 3.0, 1, 1.0, 1)]
        assert cloud.to_rows(replicate=4)[1] == (4, 3.0, 3.0, 1, 1.0, 1)

    def test_plateaus_are_not_strict_maxima(self):
        assert extract_local_maxima(path_from_values([0.0, 1.0, 1.0, 0.0])) == []

    def test_short_paths(self):
        assert len(scan_local_maxima(path_from_values([0.0, 1.0]))) == 0

    def test_return_distances_on_random_walk(self):
        rng = np.random.default_rng(4)
        values = np.concatenate([[0.0], np.cumsum(rng.standard_normal(300))])
        points = extract_local_maxima(path_from_values(values))
        assert points
        for p in points:
            i = int(p.s)
            left, right = _naive_returns(values, i)
            assert p.l_censored == (left < 0)
            assert p.r_censored == (right < 0)
            assert p.l == (i if left < 0 else i - left)
            assert p.r == (values.size - 1 - i if right < 0 else right - i)

    def test_s_range_is_half_open(self):
        path = path_from_values([0.0, 2.0, 1.0, 3.0, 0.0])
        assert scan_local_maxima(path, (1.0, 3.0)).s.tolist() == [1.0]
        cloud = scan_local_maxima(path)
        assert cloud.in_range((1.0, 3.0)).s.tolist() == [1.0]

    def test_packing_bound(self):
        spec = SimSpec('brownian', GridSpec.window(3.0, 512), 5, 3)
        for i in range(spec.replicates):
            path = gen_path(spec, i)
            cloud = scan_local_maxima(path)
            for m in (0.01, 0.1, 0.5):
                close = np.minimum(cloud.l, cloud.r) >= m
                assert np.count_nonzero(close) <= path.grid.length / m + 1

    def test_cloud_points_round_trip(self):
        cloud = scan_local_maxima(path_from_values([0.0, 2.0, 1.0, 3.0, 0.0]))
        again = LocalMaxCloud.from_points(cloud.points(), cloud.grid_step, cloud.window)
        assert again.points() == cloud.points()
        assert list(cloud.uncensored) == [False, False]


class TestPsiTransform:

    def test_values(self):
        u, v = psi_transform(LocalMaxPoint(0.5, 0.4, 0.7))
        assert u == pytest.approx(0.4)
        assert v == pytest.approx(0.4 / 1.1)

    def test_censored_point(self):
        with pytest.raises(CensoredPointError):
            psi_transform(LocalMaxPoint(0.5, 0.4, 0.7, r_censored=True))
