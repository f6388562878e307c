import numpy as np
import pytest

from widthlab import WidthLabError, direction_grid, grid_from_json


@pytest.mark.parametrize("dim,count", [(2, 8), (2, 4096), (3, 100), (3, 20000), (4, 64)])
def test_grid_invariants(dim, count):
    grid = direction_grid(dim, count)
    assert grid.dim == dim
    assert grid.count == count
    norms = np.linalg.norm(grid.directions, axis=1)
    assert np.max(np.abs(norms - 1.0)) <= 1e-12
    # exact antipodal closure, coordinatewise
    assert np.array_equal(grid.directions[grid.antipode_index], -grid.directions)
    # the antipode map is an involution without fixed points
    assert np.array_equal(grid.antipode_index[grid.antipode_index], np.arange(count))
    assert not np.any(grid.antipode_index == np.arange(count))


def test_dim1_grid_is_plus_minus_one():
    grid = direction_grid(1)
    assert sorted(grid.directions.ravel().tolist()) == [-1.0, 1.0]


def test_dim2_grid_equally_spaced_and_contains_axes():
    grid = direction_grid(2, 12)
    angles = np.sort(np.mod(np.arctan2(grid.directions[:, 1], grid.directions[:, 0]), 2 * np.pi))
    gaps = np.diff(angles)
    assert np.allclose(gaps, 2 * np.pi / 12, atol=1e-12)
    assert any(np.array_equal(u, [1.0, 0.0]) for u in grid.directions)
    assert any(np.array_equal(u, [-1.0, -0.0]) for u in grid.directions)


def test_pair_representatives_cover_each_pair_once():
    grid = direction_grid(2, 64)
    rep = grid.pair_representatives()
    assert len(rep) == 32
    seen = set(rep) | set(grid.antipode_index[rep])
    assert seen == set(range(64))


def test_odd_count_rejected():
    with pytest.raises(WidthLabError):
        direction_grid(2, 9)


def test_grid_json_round_trip():
    grid = direction_grid(3, 500)
    clone = grid_from_json(grid.to_json())
    assert np.array_equal(clone.directions, grid.directions)
