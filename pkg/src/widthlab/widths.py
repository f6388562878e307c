"""Width functions, constant-width classification, Hausdorff distance, diameter.

The Hausdorff distance between convex bodies equals the sup-norm distance of
their support functions, which is the single computational definition used
here; all quantities are evaluated over one stated direction grid.
"""

import io
import math
from dataclasses import dataclass

import numpy as np

from .bodies import Body, PointHull, sample_support, support
from .config import DEFAULT_TOLERANCES
from .errors import DimensionMismatchError, WidthLabError


@dataclass(frozen=True)
class WidthRange:
    """Convex subset of [0, inf) given by endpoints and open/closed flags."""

    lo: float
    hi: float
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        if self.lo < 0 or math.isnan(self.lo) or math.isnan(self.hi):
            raise WidthLabError("width range endpoints must be >= 0")
        if self.lo > self.hi:
            raise WidthLabError("width range needs lo <= hi")
        if math.isinf(self.hi) and self.hi_closed:
            raise WidthLabError("an infinite upper endpoint cannot be closed")

    @property
    def is_zero_singleton(self):
        return self.lo == 0.0 and self.hi == 0.0 and self.lo_closed and self.hi_closed

    def contains(self, value, tol=0.0):
        lower = value >= self.lo - tol if self.lo_closed else value > self.lo - tol
        upper = value <= self.hi + tol if self.hi_closed else value < self.hi + tol
        return bool(lower and upper)

    @classmethod
    def positive(cls):
        return cls(0.0, math.inf, lo_closed=False, hi_closed=False)

    @classmethod
    def nonnegative(cls):
        return cls(0.0, math.inf, lo_closed=True, hi_closed=False)

    @classmethod
    def closed(cls, lo, hi):
        return cls(float(lo), float(hi), True, True)

    @classmethod
    def singleton(cls, d):
        return cls(float(d), float(d), True, True)


@dataclass(frozen=True)
class WidthReport:
    """Width statistics over one grid, with witness directions."""

    min_width: float
    max_width: float
    spread: float
    mean_width: float
    witness_dir_min: np.ndarray
    witness_dir_max: np.ndarray

    def to_json(self):
        return {
            "min": float(self.min_width),
            "max": float(self.max_width),
            "spread": float(self.spread),
            "mean": float(self.mean_width),
            "argmin_dir": self.witness_dir_min.tolist(),
            "argmax_dir": self.witness_dir_max.tolist(),
        }


CONSTANT_IN_RANGE = "constant_in_range"
CONSTANT_OUTSIDE_RANGE = "constant_outside_range"
NOT_CONSTANT = "not_constant"


@dataclass(frozen=True)
class WidthVerdict:
    kind: str
    width: float | None
    spread: float

    @property
    def is_constant(self):
        return self.kind != NOT_CONSTANT


def width(body, u, tol=DEFAULT_TOLERANCES):
    """Width h(u) + h(-u) of a body in a single unit direction."""
    u = np.asarray(u, dtype=float)
    return support(body, u, tol) + support(body, -u, tol)


def relative_width(left, right, u, tol=DEFAULT_TOLERANCES):
    """Relative width h_Y(u) + h_Z(-u) of an ordered pair in direction u."""
    if left.dim != right.dim:
        raise DimensionMismatchError("pair members must share a dimension")
    u = np.asarray(u, dtype=float)
    return support(left, u, tol) + support(right, -u, tol)


def _width_values(grid, values):
    rep = grid.pair_representatives()
    return rep, values[rep] + values[grid.antipode_index[rep]]


def width_report(body, grid, sample=None):
    """Min/max/mean width over the grid, each antipodal pair counted once."""
    if sample is None:
        sample = sample_support(body, grid)
    rep, w = _width_values(grid, sample.values)
    imin = int(np.argmin(w))
    imax = int(np.argmax(w))
    return WidthReport(
        min_width=float(w[imin]),
        max_width=float(w[imax]),
        spread=float(w[imax] - w[imin]),
        mean_width=float(w.mean()),
        witness_dir_min=grid.directions[rep[imin]],
        witness_dir_max=grid.directions[rep[imax]],
    )


def classify_constant_width(body, grid, width_range, tol=None, sample=None):
    """Constant-width verdict against a width range.

    The spread threshold is tol * max(1, mean width); range membership uses
    the same absolute slack so that singleton ranges are decidable in floats.
    """
    if tol is None:
        tol = DEFAULT_TOLERANCES.constant_width
    if not tol > 0:
        raise WidthLabError("classification tolerance must be positive")
    report = width_report(body, grid, sample=sample)
    threshold = tol * max(1.0, abs(report.mean_width))
    if report.spread > threshold:
        return WidthVerdict(NOT_CONSTANT, None, report.spread)
    if width_range.contains(report.mean_width, tol=threshold):
        return WidthVerdict(CONSTANT_IN_RANGE, report.mean_width, report.spread)
    return WidthVerdict(CONSTANT_OUTSIDE_RANGE, report.mean_width, report.spread)


def hausdorff_distance(left, right, grid):
    """Sampled Hausdorff distance: max |h_Y - h_Z| over the grid.

    A lower bound of the true distance, converging under grid refinement.
    """
    if left.dim != right.dim:
        raise DimensionMismatchError("bodies must share a dimension")
    a = sample_support(left, grid).values
    b = sample_support(right, grid).values
    return float(np.max(np.abs(a - b)))


def diameter(body, grid):
    """Diameter: exact pairwise max for point hulls, max sampled width otherwise."""
    if isinstance(body, PointHull):
        pts = body.points
        sq = np.sum((pts[:, None, :] - pts[None, :, :]) ** 2, axis=-1)
        return float(np.sqrt(sq.max()))
    return width_report(body, grid).max_width


def width_profile_csv(body, grid, sample=None):
    """CSV rows (theta_or_index, h(u), h(-u), w(u)) over antipodal representatives."""
    if sample is None:
        sample = sample_support(body, grid)
    rep = grid.pair_representatives()
    values = sample.values
    out = io.StringIO()
    out.write("theta_or_index,h_u,h_neg_u,w_u\n")
    for k in rep:
        u = grid.directions[k]
        h_pos = float(values[k])
        h_neg = float(values[grid.antipode_index[k]])
        if grid.dim == 2:
            key = repr(float(np.mod(math.atan2(u[1], u[0]), 2.0 * math.pi)))
        else:
            key = str(int(k))
        out.write(f"{key},{h_pos!r},{h_neg!r},{(h_pos + h_neg)!r}\n")
    return out.getvalue()
