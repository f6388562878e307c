"""Similarity transformations g(x) = v + lambda * R x with R orthogonal."""

import numpy as np

from .config import DEFAULT_TOLERANCES
from .errors import WidthLabError


class Similarity:
    """Affine similarity: translation v, ratio lambda > 0, orthogonal R.

    Acts on points as g(x) = v + lambda * R x, scaling all distances by
    lambda.  R may have determinant -1 (reflections are allowed).
    """

    def __init__(self, translation, ratio, rotation, tol=DEFAULT_TOLERANCES):
        v = np.asarray(translation, dtype=float).ravel()
        R = np.asarray(rotation, dtype=float)
        ratio = float(ratio)
        n = len(v)
        if R.shape != (n, n):
            raise WidthLabError("rotation must be an n x n matrix matching the translation")
        if not np.all(np.isfinite(v)) or not np.all(np.isfinite(R)):
            raise WidthLabError("similarity entries must be finite")
        if not ratio > 0:
            raise WidthLabError("similarity ratio must be positive")
        if np.max(np.abs(R @ R.T - np.eye(n))) > tol.orthogonality:
            raise WidthLabError("rotation matrix is not orthogonal within tolerance")
        self.translation = v
        self.ratio = ratio
        self.rotation = R
        self.translation.setflags(write=False)
        self.rotation.setflags(write=False)

    @property
    def dim(self):
        return len(self.translation)

    def __call__(self, x):
        """Apply to a point (n,) or a stack of points (m, n)."""
        x = np.asarray(x, dtype=float)
        return self.translation + self.ratio * (x @ self.rotation.T)

    def pull_back_directions(self, U):
        """Rows R^T u for a stack of directions (used by support oracles)."""
        return np.asarray(U, dtype=float) @ self.rotation

    def to_json(self):
        return {
            "translation": self.translation.tolist(),
            "ratio": float(self.ratio),
            "rotation": self.rotation.tolist(),
        }


def identity_similarity(dim):
    return Similarity(np.zeros(dim), 1.0, np.eye(dim))


def translation(v):
    v = np.asarray(v, dtype=float).ravel()
    return Similarity(v, 1.0, np.eye(len(v)))


def rotation_2d(angle, ratio=1.0, shift=(0.0, 0.0)):
    """Planar rotation about the origin, optionally scaled and translated."""
    c, s = np.cos(angle), np.sin(angle)
    return Similarity(np.asarray(shift, dtype=float), ratio, np.array([[c, -s], [s, c]]))
