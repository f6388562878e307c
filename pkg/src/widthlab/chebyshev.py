"""Minimal enclosing (Chebyshev) balls.

Two solvers behind one contract: an exact recursive move-to-front solver for
finite point sets, and a minimax solver for support-oracle bodies that
minimizes max_k (h(u_k) - <c, u_k>) over the grid.  The minimax solver runs a
short averaged-subgradient phase to localize the center, then refines with an
active-set linear program until the full-grid optimality gap closes; the
reported radius is the achieved maximum over the whole grid.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from .bodies import PointHull, sample_support
from .config import DEFAULT_TOLERANCES
from .errors import MaxIterationsError, WidthLabError


@dataclass(frozen=True)
class ChebyshevData:
    """Smallest enclosing ball: center, radius and near-active directions."""

    center: np.ndarray
    radius: float
    active_dirs: np.ndarray

    @property
    def active_count(self):
        return len(self.active_dirs)

    def to_json(self):
        return {
            "center": self.center.tolist(),
            "radius": float(self.radius),
            "active_count": int(self.active_count),
        }


def _circumball(boundary):
    """Smallest ball with all boundary points on its surface.

    The center is the minimal-norm solution within the affine hull of the
    boundary set, which is where the true circumcenter lives.
    """
    base = boundary[0]
    if len(boundary) == 1:
        return base.copy(), 0.0
    rel = np.asarray(boundary[1:]) - base
    rhs = np.sum(rel * rel, axis=1)
    x, *_ = np.linalg.lstsq(2.0 * rel, rhs, rcond=None)
    center = base + x
    radius = max(float(np.linalg.norm(p - center)) for p in boundary)
    return center, radius


def min_enclosing_ball_points(points, eps=1e-10):
    """Exact smallest enclosing ball of a finite point set (Welzl, move-to-front)."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.size == 0:
        raise WidthLabError("need at least one point")
    if not np.all(np.isfinite(pts)):
        raise WidthLabError("points must be finite")
    n = pts.shape[1]
    order = np.random.default_rng(0x5EED).permutation(len(pts))
    pts = pts[order]

    def solve(count, boundary):
        center, radius = _circumball(boundary) if boundary else (None, -1.0)
        if len(boundary) == n + 1:
            return center, radius
        for i in range(count):
            p = pts[i]
            if center is None or np.linalg.norm(p - center) > radius + eps * (1.0 + radius):
                center, radius = solve(i, boundary + [p])
        return center, radius

    center, radius = solve(len(pts), [])
    dists = np.linalg.norm(pts - center, axis=1)
    radius = max(radius, float(dists.max()))
    if radius <= eps:
        active = np.zeros((0, n))
    else:
        on_boundary = np.abs(dists - radius) <= 1e-9 * (1.0 + radius)
        active = (pts[on_boundary] - center) / dists[on_boundary, None]
    return ChebyshevData(center=center, radius=float(radius), active_dirs=active)


def _subgradient_phase(U, h, iters, step_scale=None):
    """Averaged subgradient descent on f(c) = max_k (h_k - <c, u_k>).

    Steps are r0 / sqrt(k) where r0 is the initial max residual; the returned
    center is the better of the running average and the best iterate.
    """
    n = U.shape[1]
    c = (n / len(h)) * (h @ U)
    resid = h - U @ c
    r0 = float(resid.max()) if step_scale is None else step_scale
    if r0 <= 0 or iters <= 0:
        return c
    best_c, best_f = c.copy(), float(resid.max())
    acc = np.zeros(n)
    for k in range(1, iters + 1):
        j = int(np.argmax(resid))
        if resid[j] < best_f:
            best_f = float(resid[j])
            best_c = c.copy()
        c = c + (r0 / math.sqrt(k)) * U[j]
        resid = h - U @ c
        acc += c
    c_avg = acc / iters
    if float((h - U @ c_avg).max()) < best_f:
        return c_avg
    return best_c


def _active_set_polish(U, h, c, gap_tol, max_rounds=50):
    """Cutting-plane LP refinement of the discretized minimax center."""
    n = U.shape[1]
    resid = h - U @ c
    seed = np.argsort(resid)[-max(8 * (n + 1), 32):]
    active = set(int(i) for i in seed)
    # A spread-out subset keeps the LP bounded even when residuals are tied.
    stride = max(1, len(h) // max(8 * (n + 1), 16))
    active.update(int(i) for i in range(0, len(h), stride))
    cost = np.zeros(n + 1)
    cost[n] = 1.0
    bounds = [(None, None)] * (n + 1)
    options = {
        "primal_feasibility_tolerance": 1e-10,
        "dual_feasibility_tolerance": 1e-10,
    }
    for _ in range(max_rounds):
        idx = np.fromiter(active, dtype=int)
        a_ub = np.hstack([-U[idx], -np.ones((len(idx), 1))])
        res = linprog(cost, A_ub=a_ub, b_ub=-h[idx], bounds=bounds, method="highs",
                      options=options)
        if not res.success:
            raise MaxIterationsError(f"center refinement LP failed: {res.message}")
        c = res.x[:n]
        objective = float(res.x[n])
        resid = h - U @ c
        worst = float(resid.max())
        if worst - objective <= gap_tol * (1.0 + abs(worst)):
            return c, worst
        # Constraints outside the working set no worse than those inside:
        # more cuts cannot help, the residual gap is LP solver precision.
        if worst <= float(resid[idx].max()) + 1e-12:
            return c, worst
        for i in np.argsort(resid)[-32:]:
            active.add(int(i))
    raise MaxIterationsError("minimax gap failed to close within the iteration budget")


def minimax_center(U, h, tol=None, budget=5000):
    """Discretized Chebyshev center of the support data (U directions, h values)."""
    if tol is None:
        tol = DEFAULT_TOLERANCES.constant_width
    warm = _subgradient_phase(U, h, min(budget, 128))
    return _active_set_polish(U, h, warm, gap_tol=min(tol, 1e-9))


def chebyshev(body, grid, tol=None, budget=5000, sample=None):
    """Chebyshev ball of a body.

    Point hulls are solved exactly (the hull and its vertex set share the
    ball); every other body goes through the grid minimax solver.  Active
    directions are those whose residual comes within tol*(1+R) of the best
    residual seen on the grid.
    """
    if tol is None:
        tol = DEFAULT_TOLERANCES.constant_width
    if isinstance(body, PointHull):
        data = min_enclosing_ball_points(body.points)
        center, radius = data.center, data.radius
    else:
        if sample is None:
            sample = sample_support(body, grid)
        center, radius = minimax_center(grid.directions, sample.values, tol=tol, budget=budget)
    if sample is None:
        sample = sample_support(body, grid)
    resid = sample.values - grid.directions @ center
    cutoff = float(resid.max()) - tol * (1.0 + abs(radius))
    active = grid.directions[resid >= cutoff]
    return ChebyshevData(center=center, radius=float(radius), active_dirs=active)
