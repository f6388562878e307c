"""Antipodally closed direction grids on the unit sphere.

Width evaluation needs u and -u simultaneously, so every grid stores the
exact negation of each direction: the second half of the direction list is
the coordinatewise negation of the first half.  This makes antipodal closure
exact in floating point rather than depending on trig identities.
"""

import numpy as np

from .errors import WidthLabError

_GOLDEN_ANGLE = np.pi * (3.0 - np.sqrt(5.0))


class DirectionGrid:
    """Finite antipodally symmetric sample of the unit sphere.

    Attributes
    ----------
    dim : int
        Ambient dimension n (directions live on S^{n-1}).
    directions : (N, n) ndarray
        Unit vectors; ``directions[antipode_index[k]] == -directions[k]``
        holds exactly.
    antipode_index : (N,) ndarray of int
        Permutation mapping each direction to its negation.
    """

    def __init__(self, dim, directions, antipode_index):
        directions = np.asarray(directions, dtype=float)
        antipode_index = np.asarray(antipode_index, dtype=int)
        if directions.ndim != 2 or directions.shape[1] != dim:
            raise WidthLabError("directions must be an (N, dim) array")
        norms = np.linalg.norm(directions, axis=1)
        if np.any(np.abs(norms - 1.0) > 1e-12):
            raise WidthLabError("grid directions must be unit vectors (1e-12)")
        if sorted(antipode_index) != list(range(len(directions))):
            raise WidthLabError("antipode_index must be a permutation")
        if not np.array_equal(directions[antipode_index], -directions):
            raise WidthLabError("grid is not exactly antipodally closed")
        self.dim = int(dim)
        self.directions = directions
        self.antipode_index = antipode_index
        self.directions.setflags(write=False)
        self.antipode_index.setflags(write=False)

    def __len__(self):
        return len(self.directions)

    @property
    def count(self):
        return len(self.directions)

    def pair_representatives(self):
        """Indices covering each antipodal pair exactly once."""
        idx = np.arange(len(self.directions))
        return idx[idx < self.antipode_index]

    def to_json(self):
        return {"dim": self.dim, "count": self.count}


def _sphere_spiral(m):
    # Quasi-uniform spiral sample of S^2 (golden-angle latitude sweep).
    i = np.arange(m)
    z = 1.0 - (2.0 * i + 1.0) / m
    r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    phi = i * _GOLDEN_ANGLE
    pts = np.column_stack([r * np.cos(phi), r * np.sin(phi), z])
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


def _sphere_seeded(m, dim):
    # Deterministic per (dim, count): normalized Gaussian sample.
    rng = np.random.default_rng(0x5D1A2 + 7919 * dim + m)
    pts = rng.standard_normal((m, dim))
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


def direction_grid(dim, count=None):
    """Build the canonical grid of a given size.

    dim 1: exactly {+1, -1} (count is ignored).
    dim 2: count equally spaced angles, count even.
    dim >= 3: count/2 quasi-uniform points plus their exact negations.
    """
    if dim < 1:
        raise WidthLabError("dimension must be >= 1")
    if dim == 1:
        dirs = np.array([[1.0], [-1.0]])
        return DirectionGrid(1, dirs, np.array([1, 0]))
    if count is None or count < 2:
        raise WidthLabError("count must be given and >= 2")
    if count % 2 != 0:
        raise WidthLabError("count must be even for antipodal closure")
    half = count // 2
    if dim == 2:
        theta = 2.0 * np.pi * np.arange(half) / count
        first = np.column_stack([np.cos(theta), np.sin(theta)])
    elif dim == 3:
        first = _sphere_spiral(half)
    else:
        first = _sphere_seeded(half, dim)
    dirs = np.vstack([first, -first])
    antipode = np.concatenate([np.arange(half) + half, np.arange(half)])
    return DirectionGrid(dim, dirs, antipode)


def grid_from_json(obj):
    return direction_grid(int(obj["dim"]), int(obj["count"]))
