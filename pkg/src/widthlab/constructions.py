"""Canonical constant-width bodies and the 1-D parameter maps.

The planar generators are disc intersections: the classical three-disc body,
its rotations, and odd regular-polygon generalizations, plus a seeded random
generator that takes convex combinations of those (convex combinations of
constant-width-d bodies again have constant width d).  The 1-D maps convert
between intervals / interval pairs and their (width, midpoint) parameters.
"""

import math
from dataclasses import dataclass

import numpy as np

from .bodies import Ball, BallIntersection, minkowski
from .errors import WidthLabError
from .transforms import Similarity, rotation_2d


def reuleaux_vertices(d):
    """Vertices of the canonical equilateral triangle of side d."""
    return np.array([[0.0, 0.0], [d, 0.0], [d / 2.0, d * math.sqrt(3.0) / 2.0]])


def reuleaux_triangle(d, pose=None):
    """Intersection of three discs of radius d centered at the triangle vertices.

    Constant width d.  A pose with ratio != 1 scales the width to ratio * d.
    """
    if not d > 0:
        raise WidthLabError("width must be positive")
    verts = reuleaux_vertices(d)
    radius = d
    if pose is not None:
        verts = pose(verts)
        radius = pose.ratio * d
    return BallIntersection(verts, [radius] * 3)


def rotated_family(d, count):
    """Rotations of the canonical triangle body about the origin.

    Member j is rotated by j*pi/(3*count) for j = 0..count-1; the family is
    linearly independent as support functions for every count.
    """
    if count < 1:
        raise WidthLabError("family size must be >= 1")
    return [
        reuleaux_triangle(d, pose=rotation_2d(j * math.pi / (3.0 * count)))
        for j in range(count)
    ]


def reuleaux_polygon(d, sides, pose=None):
    """Constant-width body on a regular odd polygon.

    The circumradius is chosen so that the longest vertex-to-vertex chord is
    exactly d; intersecting discs of radius d centered at the vertices then
    gives a body of constant width d.
    """
    if not d > 0:
        raise WidthLabError("width must be positive")
    if sides < 3 or sides % 2 == 0:
        raise WidthLabError("polygon side count must be odd and >= 3")
    circumradius = d / (2.0 * math.cos(math.pi / (2.0 * sides)))
    angles = math.pi / 2.0 + 2.0 * math.pi * np.arange(sides) / sides
    verts = circumradius * np.column_stack([np.cos(angles), np.sin(angles)])
    radius = d
    if pose is not None:
        verts = pose(verts)
        radius = pose.ratio * d
    return BallIntersection(verts, [radius] * sides)


def random_cw_body_2d(seed, d=1.0, terms=3):
    """Seeded random constant-width body of width d in the plane.

    A convex combination of `terms` randomly rotated odd Reuleaux polygons of
    width d and the ball of radius d/2; weights come from normalized seeded
    exponentials.  Deterministic per seed.
    """
    if terms < 1:
        raise WidthLabError("need at least one polygon term")
    rng = np.random.default_rng(seed)
    sides = rng.choice([3, 5, 7], size=terms)
    angles = rng.uniform(0.0, 2.0 * math.pi, size=terms)
    weights = rng.exponential(1.0, size=terms + 1)
    weights = weights / weights.sum()
    combo = [
        (float(weights[i]), reuleaux_polygon(d, int(sides[i]), pose=rotation_2d(angles[i])))
        for i in range(terms)
    ]
    combo.append((float(weights[terms]), Ball(np.zeros(2), d / 2.0)))
    return minkowski(combo)


def tetra_ball_body(r):
    """Intersection of four balls of radius r centered at a regular tetrahedron
    with edge length r (centered at the origin).  Never of constant width."""
    if not r > 0:
        raise WidthLabError("radius must be positive")
    scale = r / (2.0 * math.sqrt(2.0))
    verts = scale * np.array(
        [[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]]
    )
    return BallIntersection(verts, [r] * 4)


@dataclass(frozen=True)
class Interval1D:
    """Closed interval [lo, hi] on the line."""

    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise WidthLabError("interval needs lo <= hi")


@dataclass(frozen=True)
class PairParams1D:
    """(width d, left-interval length a, midpoint p) with 0 <= a <= 2d."""

    d: float
    a: float
    p: float

    def __post_init__(self):
        if self.d < 0:
            raise WidthLabError("pair width must be >= 0")
        if not 0.0 <= self.a <= 2.0 * self.d:
            raise WidthLabError("interval length must satisfy 0 <= a <= 2d")


def interval_to_width_mid(interval):
    """[x, y] -> (width y - x, midpoint (x + y)/2)."""
    return interval.hi - interval.lo, (interval.lo + interval.hi) / 2.0


def width_mid_to_interval(d, mid):
    """(d, mid) -> [mid - d/2, mid + d/2]."""
    if d < 0:
        raise WidthLabError("width must be >= 0")
    return Interval1D(mid - d / 2.0, mid + d / 2.0)


def interval_pair_to_params(left, right, tol=1e-12):
    """Parameters of a constant-relative-width interval pair.

    For ([x, y], [v, z]) the relative width is z - x = y - v; the map returns
    (d, a, p) = (z - x, y - x, (x + y)/2).  Pairs whose two width readings
    disagree beyond tol are rejected.
    """
    d_hi = right.hi - left.lo
    d_lo = left.hi - right.lo
    if abs(d_hi - d_lo) > tol:
        raise WidthLabError(
            f"pair is not of constant relative width ({d_hi!r} vs {d_lo!r})"
        )
    a = left.hi - left.lo
    # a <= 2d holds exactly; clamp away the last-ulp overshoot of the two
    # independently rounded width readings.
    a = min(max(a, 0.0), 2.0 * d_hi)
    return PairParams1D(d=d_hi, a=a, p=(left.lo + left.hi) / 2.0)


def params_to_interval_pair(params):
    """Inverse map: (d, a, p) -> ([p - a/2, p + a/2], [p - (d - a/2), p + (d - a/2)])."""
    half = params.a / 2.0
    other = params.d - half
    return (
        Interval1D(params.p - half, params.p + half),
        Interval1D(params.p - other, params.p + other),
    )
