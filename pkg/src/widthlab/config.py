"""Shared numeric tolerances.

Everything here is exact mathematics discretized onto finite grids, so every
comparison needs an explicit tolerance.  All defaults live in one record so
they can be overridden coherently instead of being scattered as magic numbers.
"""

import os
from dataclasses import dataclass, fields


@dataclass(frozen=True)
class Tolerances:
    abs_tol: float = 1e-9
    rel_tol: float = 1e-7
    unit_norm: float = 1e-9          # accepted deviation of a direction norm from 1
    orthogonality: float = 1e-10     # bound on |R R^T - I| for rotation matrices
    feasibility_slack: float = 1e-9  # ball-membership slack in candidate filtering
    emptiness_residual: float = 1e-7 # alternating-projection residual that flags empty
    constant_width: float = 1e-7     # default spread threshold scale for classification

    def __post_init__(self):
        for f in fields(self):
            if not getattr(self, f.name) > 0:
                raise ValueError(f"tolerance {f.name} must be positive")


DEFAULT_TOLERANCES = Tolerances()


def thread_cap() -> int:
    """Parallelism cap from WIDTHLAB_THREADS (defaults to 1, i.e. sequential)."""
    raw = os.environ.get("WIDTHLAB_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        return 1
    return max(1, value)
