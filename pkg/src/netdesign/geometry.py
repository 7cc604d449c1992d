"""Points, pairwise distances, and point-set generators.

Every other module consumes distances only through :class:`PointSet`, which
caches the dense pairwise matrix together with the extreme distances and the
aspect ratio.  Randomness always goes through ``numpy.random.default_rng``
(PCG64) with an explicit seed, so instances are bitwise reproducible.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

#: Default relative tolerance for float comparisons across the package.
DEFAULT_REL_TOL = 1e-9


def distance(u, v) -> float:
    """Euclidean distance between two coordinate sequences of equal dimension."""
    a = np.asarray(u, dtype=float)
    b = np.asarray(v, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


def pairwise_distances(coords: np.ndarray) -> np.ndarray:
    """Dense symmetric Euclidean distance matrix with an exact zero diagonal.

    The result is symmetrized by mirroring the upper triangle so that
    ``dist[i, j] == dist[j, i]`` holds bitwise.
    """
    coords = np.asarray(coords, dtype=float)
    n, d = coords.shape
    if d <= 8:
        diff = coords[:, None, :] - coords[None, :, :]
        dist = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
    else:
        # Gram-matrix route avoids the (n, n, d) temporary for high dimension.
        sq = np.einsum("ij,ij->i", coords, coords)
        gram = coords @ coords.T
        dist = np.sqrt(np.maximum(sq[:, None] + sq[None, :] - 2.0 * gram, 0.0))
    upper = np.triu(dist, 1)
    return upper + upper.T


@dataclass(frozen=True)
class PointSet:
    """An instance of agent positions with cached pairwise distances.

    Attributes:
        coords: ``(n, d)`` array of positions.
        dist:   ``(n, n)`` symmetric Euclidean distance matrix.
        w_max:  longest pairwise distance.
        w_min:  shortest nonzero pairwise distance.
        r:      aspect ratio ``w_max / w_min``.
        seed:   seed used by the generator that produced the set, if any.
    """

    coords: np.ndarray
    dist: np.ndarray
    w_max: float
    w_min: float
    r: float
    seed: int | None = None

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    @property
    def dim(self) -> int:
        return self.coords.shape[1]

    def __post_init__(self):
        self.coords.setflags(write=False)
        self.dist.setflags(write=False)


def point_set_stats(points, seed: int | None = None) -> PointSet:
    """Build a :class:`PointSet` from raw coordinates.

    Rejects sets with fewer than two points, non-finite coordinates, or with
    all points coincident (the shortest nonzero distance would be undefined).
    """
    coords = np.asarray(points, dtype=float)
    if coords.ndim == 1:
        coords = coords[:, None]
    if coords.ndim != 2 or coords.shape[0] < 2:
        raise ValueError("need at least two points")
    if not np.all(np.isfinite(coords)):
        raise ValueError("coordinates must be finite")
    dist = pairwise_distances(coords)
    positive = dist[dist > 0.0]
    if positive.size == 0:
        raise ValueError("all points coincide: shortest nonzero distance undefined")
    w_max = float(dist.max())
    w_min = float(positive.min())
    return PointSet(coords=coords, dist=dist, w_max=w_max, w_min=w_min,
                    r=w_max / w_min, seed=seed)


def random_unit_square(n: int, seed: int) -> PointSet:
    """``n`` i.i.d. uniform points in [0, 1]^2, reproducible from ``seed``."""
    if n < 2:
        raise ValueError("need at least two points")
    rng = np.random.default_rng(seed)
    return point_set_stats(rng.random((n, 2)), seed=seed)


def integer_grid(*sides: int) -> PointSet:
    """All integer lattice points of the box [0, b_1] x ... x [0, b_d].

    ``integer_grid(2, 1)`` yields the 6 points of a 3x2 lattice.
    """
    if not sides:
        raise ValueError("need at least one side length")
    if any(int(b) != b or b < 1 for b in sides):
        raise ValueError("side lengths must be integers >= 1")
    axes = [np.arange(int(b) + 1) for b in sides]
    coords = np.array(list(itertools.product(*axes)), dtype=float)
    return point_set_stats(coords)


def corner_square_counts(ps: PointSet) -> np.ndarray:
    """Occupancy of the four corner sub-squares of side 1/4 of the unit square.

    Used as the empirical precondition for the random-point design regime:
    each corner square (area 1/16) should hold at least ``(1 - delta) * n/16``
    points, and any point of the square is at distance at least ``w_max / 4``
    from the corner square diagonally opposite its own quadrant.
    """
    if ps.dim != 2:
        raise ValueError("corner squares are defined for planar unit-square instances")
    x, y = ps.coords[:, 0], ps.coords[:, 1]
    lo_x, hi_x = x <= 0.25, x >= 0.75
    lo_y, hi_y = y <= 0.25, y >= 0.75
    return np.array([
        int(np.sum(lo_x & lo_y)),
        int(np.sum(hi_x & lo_y)),
        int(np.sum(lo_x & hi_y)),
        int(np.sum(hi_x & hi_y)),
    ])


# ---------------------------------------------------------------------------
# Instance files
# ---------------------------------------------------------------------------

def instance_to_json(ps: PointSet, alpha: float | None = None) -> dict:
    """JSON payload for an instance file; floats round-trip exactly."""
    return {
        "dim": ps.dim,
        "points": [[float(c) for c in row] for row in ps.coords],
        "alpha": None if alpha is None else float(alpha),
        "seed": ps.seed,
    }


def save_instance(ps: PointSet, path, alpha: float | None = None) -> None:
    Path(path).write_text(json.dumps(instance_to_json(ps, alpha)) + "\n")


def load_instance(path) -> tuple[PointSet, float | None]:
    """Read an instance file; returns the point set and the stored alpha."""
    payload = json.loads(Path(path).read_text())
    coords = np.asarray(payload["points"], dtype=float)
    if coords.ndim != 2 or coords.shape[1] != payload["dim"]:
        raise ValueError("instance file dimension mismatch")
    seed = payload.get("seed")
    ps = point_set_stats(coords, seed=seed)
    return ps, payload.get("alpha")
