"""Support-oracle checks for every body variant."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_rotation, random_unit
from oracles import (
    brute_force_hull_support,
    closed_form_triangle_support,
    projected_gradient_support,
)
from widthlab import (
    Ball,
    BallIntersection,
    DimensionMismatchError,
    EmptyIntersectionError,
    MinkComb,
    PointHull,
    Reflected,
    Similarity,
    UnsupportedDimensionError,
    WidthLabError,
    apply_similarity,
    direction_grid,
    minkowski,
    reflect,
    reuleaux_triangle,
    rotation_2d,
    sample_support,
    support,
    support_point,
    support_values,
    translation,
)


def angle(t):
    return np.array([np.cos(t), np.sin(t)])


def test_unit_ball_support_is_one():
    ball = Ball([0.0, 0.0], 1.0)
    assert support(ball, [1.0, 0.0]) == 1.0
    assert support(ball, angle(2.3)) == pytest.approx(1.0, abs=1e-15)


def test_ball_support_formula():
    ball = Ball([2.0, -1.0], 0.5)
    u = angle(0.7)
    assert support(ball, u) == pytest.approx(float(u @ [2.0, -1.0]) + 0.5, abs=1e-15)


def test_point_hull_support_matches_brute_force_exactly():
    rng = np.random.default_rng(42)
    for _ in range(25):
        dim = int(rng.integers(1, 5))
        pts = rng.normal(size=(int(rng.integers(1, 30)), dim))
        hull = PointHull(pts)
        u = random_unit(rng, dim)
        assert support(hull, u) == brute_force_hull_support(pts, u)


def test_reuleaux_support_against_closed_form():
    body = reuleaux_triangle(1.0)
    rng = np.random.default_rng(3)
    for t in rng.uniform(0.0, 2.0 * np.pi, 300):
        assert support(body, angle(t)) == pytest.approx(
            closed_form_triangle_support(t), abs=1e-12
        )


def test_reuleaux_paper_values():
    # h = d on [0, pi/3], h = 0 on [pi, 4pi/3]
    body = reuleaux_triangle(2.0)
    assert support(body, angle(np.pi / 6)) == pytest.approx(2.0, abs=1e-12)
    assert support(body, angle(7 * np.pi / 6)) == pytest.approx(0.0, abs=1e-12)
    assert support(body, angle(np.pi / 2)) == pytest.approx(np.sqrt(3.0), abs=1e-12)


def test_minkowski_combination_support_adds():
    combo = minkowski([(2.0, Ball([0.0, 0.0], 1.0)), (3.0, Ball([1.0, 0.0], 1.0))])
    assert support(combo, [1.0, 0.0]) == pytest.approx(8.0, abs=1e-15)


def test_minkowski_rejects_negative_coefficients():
    with pytest.raises(WidthLabError):
        minkowski([(-0.1, Ball([0.0, 0.0], 1.0))])


def test_minkowski_of_balls_is_a_ball():
    grid = direction_grid(2, 128)
    combo = minkowski([(1.0, Ball([1.0, 2.0], 0.5)), (1.0, Ball([-2.0, 1.0], 1.5))])
    target = Ball([-1.0, 3.0], 2.0)
    a = sample_support(combo, grid).values
    b = sample_support(target, grid).values
    assert np.max(np.abs(a - b)) <= 1e-12


def test_convex_combination_of_body_with_itself(grid2):
    body = reuleaux_triangle(1.0)
    for t in (0.0, 0.3, 1.0):
        combo = minkowski([(t, body), (1.0 - t, body)])
        a = sample_support(combo, grid2).values
        b = sample_support(body, grid2).values
        assert np.max(np.abs(a - b)) <= 1e-12


def test_difference_body_of_reuleaux_is_ball(grid2):
    body = reuleaux_triangle(1.0)
    halved = minkowski([(0.5, body), (0.5, reflect(body))])
    ball = Ball([0.0, 0.0], 0.5)
    a = sample_support(halved, grid2).values
    b = sample_support(ball, grid2).values
    assert np.max(np.abs(a - b)) <= 1e-12


def test_reflected_support():
    hull = PointHull([[1.0, 0.0], [0.0, 2.0]])
    u = angle(0.3)
    assert support(reflect(hull), u) == pytest.approx(support(hull, -u), abs=1e-15)


def test_similarity_image_support_translation():
    moved = apply_similarity(translation([3.0, 4.0]), Ball([0.0, 0.0], 1.0))
    u = angle(1.1)
    assert support(moved, u) == pytest.approx(1.0 + float(u @ [3.0, 4.0]), abs=1e-14)


def test_similarity_image_rotation_identity(grid2):
    # h_{K_alpha}(e^{it}) = h_K(e^{i(t - alpha)})
    body = reuleaux_triangle(1.0)
    rng = np.random.default_rng(11)
    for alpha in rng.uniform(0.0, 2.0 * np.pi, 20):
        rotated = apply_similarity(rotation_2d(alpha), body)
        for t in rng.uniform(0.0, 2.0 * np.pi, 10):
            assert support(rotated, angle(t)) == pytest.approx(
                support(body, angle(t - alpha)), abs=1e-9
            )


def test_identity_similarity_keeps_support(grid2):
    from widthlab import identity_similarity

    body = reuleaux_triangle(1.0)
    image = apply_similarity(identity_similarity(2), body)
    a = sample_support(image, grid2).values
    b = sample_support(body, grid2).values
    assert np.array_equal(a, b)


def test_general_similarity_support_formula():
    rng = np.random.default_rng(9)
    body = PointHull(rng.normal(size=(12, 3)))
    R = random_rotation(rng, 3)
    g = Similarity(rng.normal(size=3), 1.7, R)
    image = apply_similarity(g, body)
    for _ in range(20):
        u = random_unit(rng, 3)
        expected = float(u @ g.translation) + 1.7 * support(body, R.T @ u)
        assert support(image, u) == pytest.approx(expected, abs=1e-12)


@given(
    seed=st.integers(min_value=0, max_value=2**31 - 1),
    kind=st.sampled_from(["hull", "ball", "reuleaux", "combo", "image"]),
)
@settings(max_examples=40, deadline=None)
def test_support_sublinearity(seed, kind):
    rng = np.random.default_rng(seed)
    if kind == "hull":
        body = PointHull(rng.normal(size=(8, 2)))
    elif kind == "ball":
        body = Ball(rng.normal(size=2), float(rng.uniform(0.1, 3.0)))
    elif kind == "reuleaux":
        body = reuleaux_triangle(float(rng.uniform(0.5, 2.0)))
    elif kind == "combo":
        body = minkowski(
            [(float(rng.uniform(0, 2)), reuleaux_triangle(1.0)),
             (float(rng.uniform(0, 2)), Ball(rng.normal(size=2), 1.0))]
        )
    else:
        body = apply_similarity(
            rotation_2d(float(rng.uniform(0, 7)), ratio=float(rng.uniform(0.3, 2.0))),
            reuleaux_triangle(1.0),
        )
    u = random_unit(rng, 2)
    w = random_unit(rng, 2)
    s = u + w
    norm = np.linalg.norm(s)
    if norm < 1e-6:
        return
    lhs = support(body, s / norm) * norm
    assert lhs <= support(body, u) + support(body, w) + 1e-8


def test_support_rejects_non_unit_direction():
    with pytest.raises(WidthLabError):
        support(Ball([0.0, 0.0], 1.0), [1.0, 1.0])


def test_support_rejects_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        support(Ball([0.0, 0.0], 1.0), [1.0, 0.0, 0.0])


def test_mixed_dimension_combination_rejected():
    with pytest.raises(DimensionMismatchError):
        minkowski([(1.0, Ball([0.0, 0.0], 1.0)), (1.0, Ball([0.0, 0.0, 0.0], 1.0))])


def test_ball_intersection_dimension_cap():
    with pytest.raises(UnsupportedDimensionError):
        BallIntersection(np.zeros((2, 4)), [1.0, 1.0])


def test_empty_intersection_rejected_at_construction():
    with pytest.raises(EmptyIntersectionError):
        BallIntersection([[0.0, 0.0], [5.0, 0.0]], [1.0, 1.0])


def test_ball_intersection_feasible_point_certificate():
    body = BallIntersection([[0.0, 0.0], [1.0, 0.0]], [1.0, 1.0])
    gaps = np.linalg.norm(body.feasible_point - body.centers, axis=1) - body.radii
    assert np.max(gaps) <= 1e-7


def test_single_ball_intersection_equals_ball(grid2):
    inter = BallIntersection([[0.5, -0.25]], [2.0])
    ball = Ball([0.5, -0.25], 2.0)
    a = sample_support(inter, grid2).values
    b = sample_support(ball, grid2).values
    assert np.max(np.abs(a - b)) <= 1e-12


def test_ball_intersection_vs_projected_gradient_reference():
    rng = np.random.default_rng(2024)
    for k in range(40):
        dim = 2 if k % 2 == 0 else 3
        m = int(rng.integers(2, 5))
        centers = rng.normal(0.0, 0.3, (m, dim))
        radii = rng.uniform(1.0, 1.6, m)
        body = BallIntersection(centers, radii)
        u = random_unit(rng, dim)
        assert support(body, u) == pytest.approx(
            projected_gradient_support(centers, radii, u), abs=1e-6
        )


def test_support_point_achieves_support_and_is_feasible():
    rng = np.random.default_rng(17)
    body = BallIntersection([[0.0, 0.0], [1.0, 0.0], [0.5, 0.8]], [1.0, 1.0, 1.0])
    for t in rng.uniform(0.0, 2.0 * np.pi, 50):
        u = angle(t)
        p = support_point(body, u)
        assert float(p @ u) == pytest.approx(support(body, u), abs=1e-12)
        assert np.max(np.linalg.norm(p - body.centers, axis=1) - body.radii) <= 1e-8


def test_support_point_composes_through_wrappers():
    rng = np.random.default_rng(8)
    inner = PointHull(rng.normal(size=(9, 2)))
    body = minkowski([(0.75, inner), (1.5, Ball([1.0, -1.0], 0.5))])
    wrapped = apply_similarity(rotation_2d(0.9, ratio=1.3), reflect(body))
    for t in rng.uniform(0.0, 2.0 * np.pi, 25):
        u = angle(t)
        p = support_point(wrapped, u)
        assert float(p @ u) == pytest.approx(support(wrapped, u), abs=1e-10)


def test_sample_support_matches_pointwise(grid2):
    body = reuleaux_triangle(1.0)
    vals = sample_support(body, grid2).values
    for k in (0, 17, 100, 255):
        assert vals[k] == support(body, grid2.directions[k])


def test_sample_support_deterministic(grid2):
    body = reuleaux_triangle(1.0)
    a = sample_support(body, grid2).values
    b = sample_support(body, grid2).values
    assert np.array_equal(a, b)


def test_support_values_batch_matches_scalar():
    body = Ball([1.0, 2.0, 3.0], 0.7)
    rng = np.random.default_rng(4)
    U = np.array([random_unit(rng, 3) for _ in range(10)])
    batch = support_values(body, U)
    for i in range(10):
        assert batch[i] == support(body, U[i])
