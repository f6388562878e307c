"""Pairs of bodies, the width/center fiber map, and pair-level checks.

Structural maps implemented here: the fiber coordinates of a constant-width
body (its width and Chebyshev center), the straight-line homotopy that
contracts a body onto the ball with the same coordinates, the diagonal
embedding Y -> (Y, Y), the half-sum map (Y, Z) -> (Y + Z)/2 on pairs of
constant relative width, and fiber-respecting convex combinations.  Each map
carries the invariants it is supposed to preserve as executable checks.
"""

from dataclasses import dataclass

import numpy as np

from .bodies import Ball, Body, minkowski, sample_support, support_points
from .chebyshev import minimax_center
from .config import DEFAULT_TOLERANCES
from .errors import (
    DimensionMismatchError,
    FiberMismatchError,
    InvalidBoundError,
    NotConstantWidthError,
    WidthLabError,
)
from .widths import WidthReport, width_report


@dataclass(frozen=True)
class FiberPoint:
    """Coordinates (width, center) identifying a fiber."""

    width: float
    center: np.ndarray

    def __post_init__(self):
        if self.width < 0:
            raise WidthLabError("fiber width must be >= 0")


@dataclass(frozen=True, eq=False)
class BodyPair:
    """Ordered pair (Y, Z); `width` records a certified constant relative width."""

    left: Body
    right: Body
    width: float | None = None

    def __post_init__(self):
        if self.left.dim != self.right.dim:
            raise DimensionMismatchError("pair members must share a dimension")

    @property
    def dim(self):
        return self.left.dim

    @property
    def certified(self):
        return self.width is not None


def relative_width_values(pair, grid):
    """h_Y(u) + h_Z(-u) over every grid direction."""
    left_vals = sample_support(pair.left, grid).values
    right_vals = sample_support(pair.right, grid).values
    return left_vals + right_vals[grid.antipode_index]


def certify_pair(left, right, grid, tol=None):
    """Build a pair, certifying its constant relative width on the grid."""
    if tol is None:
        tol = DEFAULT_TOLERANCES.constant_width
    pair = BodyPair(left, right)
    values = relative_width_values(pair, grid)
    mean = float(values.mean())
    spread = float(values.max() - values.min())
    if spread > tol * max(1.0, abs(mean)):
        raise NotConstantWidthError(
            f"pair relative width is not constant (spread {spread:.3e})"
        )
    return BodyPair(left, right, width=mean)


def diagonal_pair(body, grid=None, tol=None):
    """The pair (Y, Y); certified whenever a grid is given and Y has constant width."""
    if grid is None:
        return BodyPair(body, body)
    return certify_pair(body, body, grid, tol=tol)


def width_and_center(body, grid, tol=None, sample=None):
    """Fiber coordinates (mean width, Chebyshev center) of a constant-width body."""
    if tol is None:
        tol = DEFAULT_TOLERANCES.constant_width
    if sample is None:
        sample = sample_support(body, grid)
    report = width_report(body, grid, sample=sample)
    if report.spread > tol * max(1.0, abs(report.mean_width)):
        raise NotConstantWidthError(
            f"body width is not constant (spread {report.spread:.3e})"
        )
    center, _ = minimax_center(grid.directions, sample.values, tol=tol)
    return FiberPoint(width=report.mean_width, center=center)


def ball_homotopy(body, t, fiber, grid, width_tol=1e-7, center_tol=1e-5):
    """Straight-line contraction t*Y + (1-t)*B onto the fiber's ball.

    B is the ball with the fiber's center and half its width; the combination
    stays in the fiber: its width is the fiber width and its center is the
    fiber center.  Bodies whose own coordinates disagree with the fiber are
    rejected.
    """
    if not 0.0 <= t <= 1.0:
        raise WidthLabError("homotopy parameter must lie in [0, 1]")
    coords = width_and_center(body, grid, tol=width_tol)
    scale = max(1.0, abs(fiber.width))
    if abs(coords.width - fiber.width) > width_tol * scale:
        raise FiberMismatchError(
            f"body width {coords.width!r} does not match fiber width {fiber.width!r}"
        )
    if np.linalg.norm(coords.center - fiber.center) > center_tol * (1.0 + scale):
        raise FiberMismatchError("body center does not match the fiber center")
    ball = Ball(fiber.center, fiber.width / 2.0)
    return minkowski([(t, body), (1.0 - t, ball)])


def pair_half_sum(pair, grid=None):
    """(Y + Z)/2 for a certified pair; constant width equal to the pair width.

    Uncertified pairs are rejected unless a grid is given, in which case the
    certification runs first.
    """
    if not pair.certified:
        if grid is None:
            raise WidthLabError("pair must carry a certified relative width")
        pair = certify_pair(pair.left, pair.right, grid)
    return minkowski([(0.5, pair.left), (0.5, pair.right)])


def combine_pairs(pair_a, pair_b, t):
    """Componentwise combination t*(Y,Z) + (1-t)*(A,E)."""
    if not 0.0 <= t <= 1.0:
        raise WidthLabError("combination parameter must lie in [0, 1]")
    if pair_a.dim != pair_b.dim:
        raise DimensionMismatchError("pairs must share a dimension")
    left = minkowski([(t, pair_a.left), (1.0 - t, pair_b.left)])
    right = minkowski([(t, pair_a.right), (1.0 - t, pair_b.right)])
    width = None
    if pair_a.certified and pair_b.certified:
        width = t * pair_a.width + (1.0 - t) * pair_b.width
    return BodyPair(left, right, width=width)


def combine_pairs_in_fiber(pair_a, pair_b, t, grid, tol=None):
    """Combination of two pairs lying over the same half-sum body.

    The half sums must be support-identical within tol*(1+d); the output pair
    then stays in the same fiber.
    """
    if tol is None:
        tol = DEFAULT_TOLERANCES.constant_width
    if not (pair_a.certified and pair_b.certified):
        raise WidthLabError("both pairs must carry certified relative widths")
    sum_a = sample_support(pair_half_sum(pair_a), grid).values
    sum_b = sample_support(pair_half_sum(pair_b), grid).values
    gap = float(np.max(np.abs(sum_a - sum_b)))
    scale = max(1.0, abs(pair_a.width))
    if gap > tol * scale:
        raise FiberMismatchError(
            f"pairs lie over different bodies (support gap {gap:.3e})"
        )
    return combine_pairs(pair_a, pair_b, t)


@dataclass(frozen=True)
class SumWidthReport:
    """Width report of Y + Z for a certified pair, against the target 2d."""

    relative_width: float
    report: WidthReport
    mean_error: float
    spread: float
    mean_ok: bool
    spread_ok: bool

    @property
    def passed(self):
        return self.mean_ok and self.spread_ok

    def to_json(self):
        return {
            "relative_width": float(self.relative_width),
            "sum_width": self.report.to_json(),
            "mean_error": float(self.mean_error),
            "spread": float(self.spread),
            "passed": bool(self.passed),
        }


def pair_sum_width_check(pair, grid, mean_tol=1e-8, spread_tol=None):
    """Check that Y + Z has constant width twice the pair's relative width."""
    if spread_tol is None:
        spread_tol = DEFAULT_TOLERANCES.constant_width
    if not pair.certified:
        raise WidthLabError("pair must carry a certified relative width")
    total = minkowski([(1.0, pair.left), (1.0, pair.right)])
    report = width_report(total, grid)
    target = 2.0 * pair.width
    mean_error = abs(report.mean_width - target)
    scale = max(1.0, abs(target))
    return SumWidthReport(
        relative_width=pair.width,
        report=report,
        mean_error=mean_error,
        spread=report.spread,
        mean_ok=mean_error <= mean_tol * scale,
        spread_ok=report.spread <= spread_tol * scale,
    )


@dataclass(frozen=True)
class NormBoundReport:
    """Norm bounds on sampled boundary points of a pair."""

    bound: float
    max_left_norm: float
    max_right_norm: float
    parallelogram_residual: float

    @property
    def passed(self):
        return (
            self.max_left_norm < self.bound
            and self.max_right_norm < self.bound
            and self.parallelogram_residual <= 1e-12 * max(1.0, self.bound**2)
        )


def pair_norm_bound_check(pair, bound, grid, samples=256):
    """Verify the containment bound on sampled boundary points.

    Preconditions: the certified relative width is at most `bound` and the
    half-sum body lies in the ball of radius `bound` (checked via its support
    values).  The check then samples support-achieving boundary points y of Y
    and z of Z, confirms the parallelogram identity
    |y|^2 + |z|^2 = (|y+z|^2 + |y-z|^2)/2 to floating precision, and that
    every sampled point has norm strictly below 2*bound.
    """
    if not pair.certified:
        raise WidthLabError("pair must carry a certified relative width")
    if pair.width > bound:
        raise InvalidBoundError(
            f"relative width {pair.width!r} exceeds the bound {bound!r}"
        )
    half_vals = sample_support(pair_half_sum(pair), grid).values
    worst = float(half_vals.max())
    if worst > bound + DEFAULT_TOLERANCES.abs_tol:
        raise InvalidBoundError(
            f"half-sum support {worst!r} exceeds the bound {bound!r}"
        )
    count = min(samples, len(grid.directions))
    idx = np.unique(np.linspace(0, len(grid.directions) - 1, count).astype(int))
    dirs = grid.directions[idx]
    ys = support_points(pair.left, dirs)
    zs = support_points(pair.right, dirs)
    ny2 = np.sum(ys * ys, axis=1)
    nz2 = np.sum(zs * zs, axis=1)
    rhs = 0.5 * (np.sum((ys + zs) ** 2, axis=1) + np.sum((ys - zs) ** 2, axis=1))
    residual = float(np.max(np.abs(ny2 + nz2 - rhs)))
    return NormBoundReport(
        bound=2.0 * bound,
        max_left_norm=float(np.sqrt(ny2.max())),
        max_right_norm=float(np.sqrt(nz2.max())),
        parallelogram_residual=residual,
    )
