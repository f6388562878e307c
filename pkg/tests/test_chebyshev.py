"""Smallest enclosing balls: exact point solver, minimax solver, lemmas."""

import numpy as np
import pytest

from conftest import random_rotation
from oracles import grid_search_center, minimax_objective
from widthlab import (
    Ball,
    PointHull,
    Similarity,
    apply_similarity,
    chebyshev,
    direction_grid,
    min_enclosing_ball_points,
    minkowski,
    random_cw_body_2d,
    reuleaux_triangle,
    reuleaux_vertices,
    sample_support,
    translation,
    width_report,
)


class TestPointSolver:
    def test_two_points(self):
        data = min_enclosing_ball_points([[0.0, 0.0], [2.0, 0.0]])
        assert np.allclose(data.center, [1.0, 0.0], atol=1e-12)
        assert data.radius == pytest.approx(1.0, abs=1e-12)
        assert data.active_count == 2

    def test_single_point(self):
        data = min_enclosing_ball_points([[3.0, -4.0]])
        assert np.allclose(data.center, [3.0, -4.0])
        assert data.radius == 0.0

    def test_equilateral_triangle_against_grid_search(self):
        verts = reuleaux_vertices(1.0)
        data = min_enclosing_ball_points(verts)
        objective = lambda c: float(np.max(np.linalg.norm(verts - c, axis=1)))
        center, radius = grid_search_center(objective, verts.mean(axis=0), 0.5)
        assert np.linalg.norm(data.center - center) <= 1e-5
        assert data.radius == pytest.approx(radius, abs=1e-6)
        assert data.radius == pytest.approx(1.0 / np.sqrt(3.0), abs=1e-10)

    def test_enclosure_and_tightness_random(self):
        rng = np.random.default_rng(12)
        for _ in range(30):
            dim = int(rng.integers(1, 6))
            pts = rng.normal(size=(int(rng.integers(1, 60)), dim))
            data = min_enclosing_ball_points(pts)
            dists = np.linalg.norm(pts - data.center, axis=1)
            assert dists.max() <= data.radius + 1e-9 * (1.0 + data.radius)
            # minimality: some point is on the boundary
            assert dists.max() >= data.radius - 1e-9 * (1.0 + data.radius)

    def test_duplicated_points(self):
        data = min_enclosing_ball_points([[1.0, 1.0]] * 5 + [[3.0, 1.0]] * 4)
        assert np.allclose(data.center, [2.0, 1.0], atol=1e-10)
        assert data.radius == pytest.approx(1.0, abs=1e-10)


class TestBodySolver:
    def test_ball_is_its_own_chebyshev_ball(self, grid2_fine):
        data = chebyshev(Ball([2.0, -3.0], 1.25), grid2_fine)
        assert np.linalg.norm(data.center - [2.0, -3.0]) <= 1e-9
        assert data.radius == pytest.approx(1.25, abs=1e-9)

    def test_point_hull_delegates_to_exact_solver(self, grid2):
        hull = PointHull([[0.0, 0.0], [2.0, 0.0], [1.0, 0.4]])
        data = chebyshev(hull, grid2)
        exact = min_enclosing_ball_points(hull.points)
        assert np.allclose(data.center, exact.center)
        assert data.radius == exact.radius

    def test_reuleaux_against_grid_search_oracle(self, grid2_fine):
        body = reuleaux_triangle(1.0)
        data = chebyshev(body, grid2_fine)
        sample = sample_support(body, grid2_fine)
        objective = minimax_objective(grid2_fine.directions, sample.values)
        center, _ = grid_search_center(objective, np.array([0.4, 0.25]), 0.4)
        assert np.linalg.norm(data.center - center) <= 1e-5
        centroid = reuleaux_vertices(1.0).mean(axis=0)
        assert np.linalg.norm(data.center - centroid) <= 1e-5
        assert data.radius == pytest.approx(1.0 / np.sqrt(3.0), abs=1e-5)

    def test_enclosure_invariant(self, grid2_fine):
        body = random_cw_body_2d(21, d=1.0, terms=3)
        data = chebyshev(body, grid2_fine)
        sample = sample_support(body, grid2_fine)
        slack = sample.values - grid2_fine.directions @ data.center - data.radius
        assert float(slack.max()) <= 1e-9

    def test_active_directions_nonempty(self, grid2_fine):
        data = chebyshev(reuleaux_triangle(1.0), grid2_fine)
        assert data.active_count >= 2

    def test_3d_body(self, grid3):
        data = chebyshev(Ball([0.5, -0.5, 1.0], 2.0), grid3)
        assert np.linalg.norm(data.center - [0.5, -0.5, 1.0]) <= 1e-7
        assert data.radius == pytest.approx(2.0, abs=1e-8)


class TestLemmas:
    def test_equivariance_under_similarities(self, grid2_fine):
        rng = np.random.default_rng(31)
        for k in range(10):
            body = random_cw_body_2d(k, d=1.0, terms=2)
            g = Similarity(rng.normal(size=2), float(rng.uniform(0.5, 2.0)),
                           random_rotation(rng, 2))
            moved = apply_similarity(g, body)
            base = chebyshev(body, grid2_fine)
            image = chebyshev(moved, grid2_fine)
            assert np.linalg.norm(image.center - g(base.center)) <= 1e-5 * (1.0 + image.radius)
            assert image.radius == pytest.approx(g.ratio * base.radius,
                                                 abs=1e-5 * (1.0 + image.radius))

    def test_center_preserved_under_ball_sum(self, grid2_fine):
        # centered body plus a centered ball: center stays put, radii add exactly
        body = reuleaux_triangle(1.0)
        base = chebyshev(body, grid2_fine)
        centered = apply_similarity(translation(-base.center), body)
        for r in (0.25, 1.0, 3.0):
            summed = minkowski([(1.0, centered), (1.0, Ball([0.0, 0.0], r))])
            data = chebyshev(summed, grid2_fine)
            assert np.linalg.norm(data.center) <= 1e-5
            assert data.radius == pytest.approx(base.radius + r, abs=1e-5)

    def test_combination_with_centered_ball_keeps_center(self, grid2_fine):
        rng = np.random.default_rng(77)
        body = random_cw_body_2d(5, d=1.0, terms=3)
        base = chebyshev(body, grid2_fine)
        ball = Ball(base.center, 0.4)
        for t in rng.uniform(0.0, 1.0, 5):
            combined = minkowski([(float(t), body), (float(1.0 - t), ball)])
            data = chebyshev(combined, grid2_fine)
            assert np.linalg.norm(data.center - base.center) <= 1e-5

    def test_circumradius_strictly_below_width(self, grid2_fine):
        for seed in range(8):
            body = random_cw_body_2d(seed, d=1.0, terms=2)
            data = chebyshev(body, grid2_fine)
            mean_width = width_report(body, grid2_fine).mean_width
            assert data.radius < mean_width
