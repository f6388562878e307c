"""Quantitative experiments: rank of rotated support families, width sweeps.

The rank experiment samples the support functions of the rotated triangle
family on a planar grid and counts singular values above a relative
threshold; the expected numerical rank equals the family size for every size.
The pattern check evaluates the same family at the specific angles where the
values are pinned (equal to the width, or strictly between 0 and the width).
The sweep experiment measures width variation of disc/ball intersections:
planar intersections from the generators are constant width, spatial ones
never are unless they reduce to a single ball.
"""

import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bodies import BallIntersection, sample_support, support
from .config import thread_cap
from .constructions import rotated_family
from .errors import CheckFailedError, WidthLabError
from .widths import width_report


@dataclass(frozen=True)
class GramReport:
    """Numerical rank of a sampled support-function family."""

    size: int
    singular_values: np.ndarray
    numerical_rank: int
    threshold: float

    def to_json(self):
        return {
            "l": int(self.size),
            "singular_values": [float(s) for s in self.singular_values],
            "numerical_rank": int(self.numerical_rank),
            "threshold": float(self.threshold),
        }

    def singular_values_csv(self):
        out = io.StringIO()
        out.write("index,singular_value\n")
        for i, s in enumerate(self.singular_values):
            out.write(f"{i},{float(s)!r}\n")
        return out.getvalue()


def support_matrix(size, d, grid):
    """Rows are support samples of the rotated family over the grid."""
    family = rotated_family(d, size)
    workers = thread_cap()
    if workers > 1 and size > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda b: sample_support(b, grid).values, family))
    else:
        rows = [sample_support(body, grid).values for body in family]
    return np.vstack(rows)


def gram_rank(size, d, grid, threshold=1e-8):
    """Numerical rank of the rotated family at the given relative threshold."""
    if size < 1:
        raise WidthLabError("family size must be >= 1")
    if grid.dim != 2:
        raise WidthLabError("rank experiment needs a planar grid")
    if grid.count < 8 * size:
        raise WidthLabError("grid must have at least 8 directions per family member")
    matrix = support_matrix(size, d, grid)
    singular = np.linalg.svd(matrix, compute_uv=False)
    rank = int(np.sum(singular > threshold * singular[0]))
    return GramReport(
        size=size, singular_values=singular, numerical_rank=rank, threshold=threshold
    )


@dataclass(frozen=True)
class PatternCheck:
    """Outcome of the rotated-family evaluation pattern; failures are (j, s, value)."""

    size: int
    d: float
    failures: tuple

    @property
    def passed(self):
        return not self.failures


def rotated_support_pattern_check(size, d=1.0, tol=1e-9):
    """Pinned support values of the rotated family at the separation angles.

    At angle pi/3 every member supports at value d.  At angle
    pi/3 + s*pi/(3*size) the members with index >= s still read d while the
    member with index s - 1 reads strictly inside (0, d).
    """
    if size < 2:
        raise WidthLabError("pattern check needs a family of size >= 2")
    family = rotated_family(d, size)
    failures = []

    def direction(angle):
        return np.array([math.cos(angle), math.sin(angle)])

    base = math.pi / 3.0
    for j, body in enumerate(family):
        value = support(body, direction(base))
        if abs(value - d) > tol * max(1.0, d):
            failures.append((j, 0, value))
    for s in range(1, size):
        angle = base + s * math.pi / (3.0 * size)
        u = direction(angle)
        for j in range(s, size):
            value = support(family[j], u)
            if abs(value - d) > tol * max(1.0, d):
                failures.append((j, s, value))
        inner = support(family[s - 1], u)
        if not (tol < inner < d - tol):
            failures.append((s - 1, s, inner))
    return PatternCheck(size=size, d=d, failures=tuple(failures))


def _reduces_to_single_ball(body, slack=1e-12):
    """True when one ball already contains the whole intersection."""
    for i, (c_i, r_i) in enumerate(zip(body.centers, body.radii)):
        gaps = np.linalg.norm(body.centers - c_i, axis=1) + r_i - body.radii
        if np.all(gaps <= slack * max(1.0, float(body.radii.max()))):
            return True
    return False


def ball_intersection_width_sweep(body, grid, min_relative_spread=0.005):
    """Width sweep of a disc/ball intersection.

    In 3-D a configuration that does not reduce to a single ball must show
    width variation; a sweep that fails to detect any is reported as a check
    failure.
    """
    if not isinstance(body, BallIntersection):
        raise WidthLabError("sweep requires a ball-intersection body")
    report = width_report(body, grid)
    if body.dim == 3 and not _reduces_to_single_ball(body):
        if report.spread <= min_relative_spread * report.mean_width:
            raise CheckFailedError(
                "3-D ball intersection measured as constant width "
                f"(spread {report.spread:.3e}, mean {report.mean_width:.6f})"
            )
    return report


def width_sweep_csv(body, grid):
    """CSV rows (dir_index, direction coordinates, width) over antipodal pairs."""
    sample = sample_support(body, grid)
    rep = grid.pair_representatives()
    out = io.StringIO()
    coords = ",".join(f"u_{i}" for i in range(grid.dim))
    out.write(f"dir_index,{coords},width\n")
    for k in rep:
        u = grid.directions[k]
        w = float(sample.values[k] + sample.values[grid.antipode_index[k]])
        axis = ",".join(repr(float(x)) for x in u)
        out.write(f"{int(k)},{axis},{w!r}\n")
    return out.getvalue()
