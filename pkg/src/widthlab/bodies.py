"""Compact convex bodies represented by exact support-function oracles.

A body is an expression tree over six variants: point hulls, balls, ball
intersections (dimension 2 and 3 only), nonnegative Minkowski combinations,
similarity images and reflections.  Every variant evaluates its support
function h(u) = max{<y, u> : y in Y} exactly (up to floating point), and can
also produce a maximizing boundary point for each direction.

All evaluation entry points are vectorized over stacks of unit directions;
bodies are immutable after construction and all operations are pure.
"""

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLERANCES
from .errors import (
    DimensionMismatchError,
    EmptyIntersectionError,
    UnsupportedDimensionError,
    WidthLabError,
)
from .transforms import Similarity


class Body:
    """Base class; subclasses provide vectorized support evaluation."""

    kind = "body"
    dim = 0

    def _support(self, U):
        raise NotImplementedError

    def _support_points(self, U):
        raise NotImplementedError

    def __repr__(self):
        return f"<{type(self).__name__} dim={self.dim}>"


class PointHull(Body):
    """Convex hull of finitely many points; support is an exact vertex max."""

    kind = "point_hull"

    def __init__(self, points):
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        if pts.size == 0:
            raise WidthLabError("point hull needs at least one point")
        if not np.all(np.isfinite(pts)):
            raise WidthLabError("point coordinates must be finite")
        self.points = pts
        self.dim = pts.shape[1]
        self.points.setflags(write=False)

    def _dots(self, U):
        # Left-to-right accumulation over coordinates: bit-for-bit
        # reproducible, independent of the BLAS kernel in use.
        vals = np.multiply.outer(U[:, 0], self.points[:, 0])
        for j in range(1, self.dim):
            vals += np.multiply.outer(U[:, j], self.points[:, j])
        return vals

    def _support(self, U):
        return self._dots(U).max(axis=1)

    def _support_points(self, U):
        idx = self._dots(U).argmax(axis=1)
        return self.points[idx]


class Ball(Body):
    """Closed euclidean ball B(center, radius)."""

    kind = "ball"

    def __init__(self, center, radius):
        c = np.asarray(center, dtype=float).ravel()
        radius = float(radius)
        if not np.all(np.isfinite(c)) or not np.isfinite(radius):
            raise WidthLabError("ball parameters must be finite")
        if radius < 0:
            raise WidthLabError("ball radius must be >= 0")
        self.center = c
        self.radius = radius
        self.dim = len(c)
        self.center.setflags(write=False)

    def _support(self, U):
        return U @ self.center + self.radius

    def _support_points(self, U):
        return self.center + self.radius * U


class Reflected(Body):
    """The reflection -Y of an inner body."""

    kind = "reflected"

    def __init__(self, inner):
        self.inner = inner
        self.dim = inner.dim

    def _support(self, U):
        return self.inner._support(-U)

    def _support_points(self, U):
        return -self.inner._support_points(-U)


class MinkComb(Body):
    """Nonnegative Minkowski combination sum_i coef_i * Y_i.

    Support functions add linearly under nonnegative combinations, which is
    exactly how this node evaluates.
    """

    kind = "mink_comb"

    def __init__(self, terms):
        terms = [(float(coef), body) for coef, body in terms]
        if not terms:
            raise WidthLabError("Minkowski combination needs at least one term")
        dims = {body.dim for _, body in terms}
        if len(dims) != 1:
            raise DimensionMismatchError("all combination terms must share a dimension")
        for coef, _ in terms:
            if not np.isfinite(coef) or coef < 0:
                raise WidthLabError("combination coefficients must be finite and >= 0")
        self.terms = tuple(terms)
        self.dim = dims.pop()

    def _support(self, U):
        total = np.zeros(len(U))
        for coef, body in self.terms:
            total += coef * body._support(U)
        return total

    def _support_points(self, U):
        total = np.zeros((len(U), self.dim))
        for coef, body in self.terms:
            total += coef * body._support_points(U)
        return total


class SimImage(Body):
    """Image gY of a body under a similarity transformation.

    h_{gY}(u) = <v, u> + lambda * h_Y(R^T u); the support point is the image
    of the inner support point at the pulled-back direction.
    """

    kind = "sim_image"

    def __init__(self, sim: Similarity, inner: Body):
        if sim.dim != inner.dim:
            raise DimensionMismatchError("similarity and body dimensions differ")
        self.sim = sim
        self.inner = inner
        self.dim = inner.dim

    def _support(self, U):
        pulled = self.sim.pull_back_directions(U)
        return U @ self.sim.translation + self.sim.ratio * self.inner._support(pulled)

    def _support_points(self, U):
        pulled = self.sim.pull_back_directions(U)
        return self.sim(self.inner._support_points(pulled))


def _circle_pair_points(c1, r1, c2, r2):
    """Intersection points of two circles in the plane (0, 1 or 2 points)."""
    delta = c2 - c1
    d = float(np.linalg.norm(delta))
    if d < 1e-14:
        return []
    a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    h2 = r1 * r1 - a * a
    if h2 < -1e-12 * max(1.0, r1 * r1):
        return []
    h = np.sqrt(max(h2, 0.0))
    e = delta / d
    base = c1 + a * e
    perp = np.array([-e[1], e[0]])
    if h == 0.0:
        return [base]
    return [base + h * perp, base - h * perp]


def _sphere_pair_circle(c1, r1, c2, r2):
    """Circle where two spheres meet: (center, radius, axis, in-plane basis) or None."""
    delta = c2 - c1
    d = float(np.linalg.norm(delta))
    if d < 1e-14:
        return None
    a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    rho2 = r1 * r1 - a * a
    if rho2 < -1e-12 * max(1.0, r1 * r1):
        return None
    axis = delta / d
    center = c1 + a * axis
    # Any in-plane unit vector, for directions parallel to the axis.
    seed = np.zeros(3)
    seed[int(np.argmin(np.abs(axis)))] = 1.0
    basis = seed - (seed @ axis) * axis
    basis /= np.linalg.norm(basis)
    return center, np.sqrt(max(rho2, 0.0)), axis, basis


def _sphere_triple_points(c1, r1, c2, r2, c3, r3):
    """Common points of three spheres (0, 1 or 2 points)."""
    n_a = 2.0 * (c2 - c1)
    n_b = 2.0 * (c3 - c1)
    b_a = float(c2 @ c2 - c1 @ c1 + r1 * r1 - r2 * r2)
    b_b = float(c3 @ c3 - c1 @ c1 + r1 * r1 - r3 * r3)
    w = np.cross(n_a, n_b)
    w_norm = float(np.linalg.norm(w))
    if w_norm < 1e-12:
        return []
    A = np.vstack([n_a, n_b])
    x0, *_ = np.linalg.lstsq(A, np.array([b_a, b_b]), rcond=None)
    qa = w @ w
    qb = 2.0 * w @ (x0 - c1)
    qc = float((x0 - c1) @ (x0 - c1) - r1 * r1)
    disc = qb * qb - 4.0 * qa * qc
    if disc < -1e-10 * max(1.0, qa):
        return []
    root = np.sqrt(max(disc, 0.0))
    return [x0 + ((-qb + root) / (2.0 * qa)) * w, x0 + ((-qb - root) / (2.0 * qa)) * w]


def _certify_nonempty(centers, radii, tol):
    """Alternating-projection probe from the centroid; returns a feasible point."""
    x = centers.mean(axis=0)
    for _ in range(200):
        moved = False
        for c, r in zip(centers, radii):
            v = x - c
            dist = float(np.linalg.norm(v))
            if dist > r:
                x = c + v * (r / dist)
                moved = True
        if not moved:
            break
    residual = float(np.max(np.linalg.norm(x - centers, axis=1) - radii))
    if residual > tol.emptiness_residual:
        raise EmptyIntersectionError(
            f"ball intersection is empty (projection residual {residual:.3e})"
        )
    return x


class BallIntersection(Body):
    """Intersection of closed balls, dimension 2 or 3.

    Support values come from exact candidate enumeration rather than an
    iterative solver: single-sphere cap points c_i + r_i u, pairwise
    circle/sphere intersection extrema, and (in 3-D) triple-sphere corner
    points, each kept only if it lies in every other ball within a small
    slack.  Nonemptiness is certified at construction.
    """

    kind = "ball_intersection"

    def __init__(self, centers, radii, tol=DEFAULT_TOLERANCES):
        centers = np.atleast_2d(np.asarray(centers, dtype=float))
        radii = np.asarray(radii, dtype=float).ravel()
        n = centers.shape[1]
        if n not in (2, 3):
            raise UnsupportedDimensionError(
                "ball intersections are supported in dimension 2 and 3 only"
            )
        if len(radii) != len(centers) or len(radii) == 0:
            raise WidthLabError("need one radius per center")
        if not np.all(np.isfinite(centers)) or not np.all(np.isfinite(radii)):
            raise WidthLabError("ball parameters must be finite")
        if not np.all(radii > 0):
            raise WidthLabError("ball intersection radii must be positive")
        self.centers = centers
        self.radii = radii
        self.dim = n
        self._slack = tol.feasibility_slack
        self.feasible_point = _certify_nonempty(centers, radii, tol)
        self.centers.setflags(write=False)
        self.radii.setflags(write=False)

    def _point_feasible(self, x, skip=()):
        for j, (c, r) in enumerate(zip(self.centers, self.radii)):
            if j in skip:
                continue
            if np.linalg.norm(x - c) > r + self._slack:
                return False
        return True

    def _rows_feasible(self, X, skip=()):
        ok = np.ones(len(X), dtype=bool)
        for j, (c, r) in enumerate(zip(self.centers, self.radii)):
            if j in skip:
                continue
            ok &= np.linalg.norm(X - c, axis=1) <= r + self._slack
        return ok

    def _support_with_points(self, U):
        m = len(U)
        best = np.full(m, -np.inf)
        pts = np.zeros((m, self.dim))

        def consider(vals, cand):
            nonlocal best
            upd = vals > best
            if np.any(upd):
                best = np.where(upd, vals, best)
                pts[upd] = cand if cand.ndim == 1 else cand[upd]

        k = len(self.centers)
        # Cap points on each sphere.
        for i in range(k):
            cand = self.centers[i] + self.radii[i] * U
            ok = self._rows_feasible(cand, skip=(i,))
            vals = np.where(ok, U @ self.centers[i] + self.radii[i], -np.inf)
            consider(vals, cand)
        # Pairwise intersection extrema.
        for i in range(k):
            for j in range(i + 1, k):
                if self.dim == 2:
                    for x in _circle_pair_points(
                        self.centers[i], self.radii[i], self.centers[j], self.radii[j]
                    ):
                        if self._point_feasible(x, skip=(i, j)):
                            consider(U @ x, x)
                else:
                    circ = _sphere_pair_circle(
                        self.centers[i], self.radii[i], self.centers[j], self.radii[j]
                    )
                    if circ is None:
                        continue
                    q, rho, axis, basis = circ
                    proj = U - np.outer(U @ axis, axis)
                    nrm = np.linalg.norm(proj, axis=1)
                    safe = np.maximum(nrm, 1e-300)[:, None]
                    w = np.where(nrm[:, None] > 1e-13, proj / safe, basis)
                    cand = q + rho * w
                    ok = self._rows_feasible(cand, skip=(i, j))
                    vals = np.where(ok, (cand * U).sum(axis=1), -np.inf)
                    consider(vals, cand)
        # Triple-sphere corners (3-D only).
        if self.dim == 3:
            for i in range(k):
                for j in range(i + 1, k):
                    for l in range(j + 1, k):
                        for x in _sphere_triple_points(
                            self.centers[i], self.radii[i],
                            self.centers[j], self.radii[j],
                            self.centers[l], self.radii[l],
                        ):
                            if self._point_feasible(x, skip=(i, j, l)):
                                consider(U @ x, x)
        if not np.all(np.isfinite(best)):
            raise WidthLabError("support enumeration found no feasible candidate")
        return best, pts

    def _support(self, U):
        return self._support_with_points(U)[0]

    def _support_points(self, U):
        return self._support_with_points(U)[1]


@dataclass(frozen=True)
class SupportSample:
    """Support values of one body over one direction grid."""

    grid: object
    values: np.ndarray

    def __post_init__(self):
        if len(self.values) != len(self.grid.directions):
            raise WidthLabError("sample length does not match the grid")
        if not np.all(np.isfinite(self.values)):
            raise WidthLabError("support values must be finite")


def _check_directions(body, U, tol):
    U = np.atleast_2d(np.asarray(U, dtype=float))
    if U.shape[1] != body.dim:
        raise DimensionMismatchError(
            f"direction dimension {U.shape[1]} != body dimension {body.dim}"
        )
    norms = np.linalg.norm(U, axis=1)
    if np.any(np.abs(norms - 1.0) > tol.unit_norm):
        raise WidthLabError("directions must be unit vectors")
    return U


def support(body, u, tol=DEFAULT_TOLERANCES):
    """Support value h_Y(u) for a single unit direction."""
    U = _check_directions(body, u, tol)
    return float(body._support(U)[0])


def support_values(body, U, tol=DEFAULT_TOLERANCES):
    """Support values for a stack of unit directions, shape (m,)."""
    U = _check_directions(body, U, tol)
    return body._support(U)


def support_point(body, u, tol=DEFAULT_TOLERANCES):
    """A boundary point attaining the support value in direction u."""
    U = _check_directions(body, u, tol)
    return body._support_points(U)[0]


def support_points(body, U, tol=DEFAULT_TOLERANCES):
    U = _check_directions(body, U, tol)
    return body._support_points(U)


def sample_support(body, grid):
    """Evaluate the support oracle on every grid direction."""
    if body.dim != grid.dim:
        raise DimensionMismatchError(
            f"grid dimension {grid.dim} != body dimension {body.dim}"
        )
    return SupportSample(grid, body._support(grid.directions))


def minkowski(terms):
    """Nonnegative Minkowski combination of bodies."""
    return MinkComb(terms)


def reflect(body):
    return Reflected(body)


def apply_similarity(sim, body):
    """The image gY of a body under a similarity transformation."""
    return SimImage(sim, body)
