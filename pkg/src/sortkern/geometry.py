"""Sort canonicalization, orbit logic, and fill-distance geometry.

The canonical representative of a point's permutation orbit is its
coordinate vector sorted in non-increasing order; the set of all such
representatives is the fundamental simplex {x1 >= x2 >= ... >= xd}.
This module provides the sort map, orbit distinctness checks, exact
max-min fill-distance estimation over finite candidate sets (on the cube
or the sorted simplex), deterministic epsilon-covering constructions,
and the interior-cone parameters of both domains.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.spatial import cKDTree

from .errors import CapExceededError, ConfigError, DimensionMismatchError

# Exact NN queries via a tree are fast only in low dimension; above this
# the pruned block scan wins.
_TREE_MAX_DIM = 4

# 2^d corner enumeration is capped to keep candidate sets bounded.
CORNER_DIM_CAP = 14


class Domain(Enum):
    """Approximation domain: the unit cube or its sorted fundamental simplex."""

    CUBE = "cube"
    SORTED_SIMPLEX = "sorted_simplex"


@dataclass(frozen=True)
class ConeParams:
    """Interior cone condition parameters (angle in radians, radius)."""

    theta: float
    radius: float

    def __post_init__(self):
        if not (0.0 < self.theta < math.pi / 2):
            raise ConfigError(f"cone angle must lie in (0, pi/2), got {self.theta}")
        if self.radius <= 0.0:
            raise ConfigError(f"cone radius must be positive, got {self.radius}")


def as_point(p):
    """Validate and return a point as a 1-D float array with entries in [0,1]."""
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or p.shape[0] < 1:
        raise DimensionMismatchError(f"point must be a 1-D vector, got shape {p.shape}")
    if np.any(p < 0.0) or np.any(p > 1.0):
        raise ConfigError("point coordinates must lie in [0, 1]")
    return p


def as_design(X):
    """Validate and return a design as an (n, d) float array with entries in [0,1]."""
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[0] < 1 or X.shape[1] < 1:
        raise DimensionMismatchError(f"design must be an (n, d) array, got shape {X.shape}")
    if np.any(X < 0.0) or np.any(X > 1.0):
        raise ConfigError("design coordinates must lie in [0, 1]")
    return X


def sort_point(p):
    """Map a point to its orbit representative: coordinates in non-increasing order."""
    p = np.asarray(p, dtype=float)
    return np.sort(p)[::-1].copy()


def sort_points(X):
    """Row-wise sort map: each row in non-increasing order (C-contiguous result)."""
    X = np.asarray(X, dtype=float)
    return np.ascontiguousarray(np.sort(X, axis=1)[:, ::-1])


def distinct_orbits(X):
    """True iff the rows of X have pairwise-distinct sorted representatives.

    Comparison is exact on coordinates, matching the positive-definiteness
    requirement of the sorted kernel Gram matrix.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim != 2:
        raise DimensionMismatchError("distinct_orbits expects an (n, d) array")
    reps = sort_points(X)
    return np.unique(reps, axis=0).shape[0] == X.shape[0]


def cube_corners(d, cap=CORNER_DIM_CAP):
    """The 2^d vertices of [0,1]^d, or an empty set when d exceeds the cap."""
    if d > cap:
        return np.empty((0, d))
    return np.indices((2,) * d).reshape(d, -1).T.astype(float)


def ball_volume(d):
    """Volume of the d-dimensional unit Euclidean ball."""
    return math.pi ** (d / 2.0) / math.gamma(d / 2.0 + 1.0)


def simplex_inradius(d):
    """Radius of the largest ball inscribed in {1 >= x1 >= ... >= xd >= 0}."""
    return 1.0 / (2.0 + math.sqrt(2.0) * (d - 1))


def _exact_min_sq(C, X, xsq, cand_chunk=65536, block=4096):
    """Exact squared nearest-neighbor distance from each row of C to X."""
    out = np.empty(C.shape[0])
    n = X.shape[0]
    for s in range(0, C.shape[0], cand_chunk):
        c = C[s:s + cand_chunk]
        m = np.full(c.shape[0], np.inf)
        for j in range(0, n, block):
            T = c @ X[j:j + block].T
            T *= -2.0
            T += xsq[j:j + block][None, :]
            np.minimum(m, T.min(axis=1), out=m)
        m += np.einsum("ij,ij->i", c, c)
        out[s:s + cand_chunk] = m
    return out


def _maxmin_sq_pruned(X, C, prescan=32, warm=512, chunk=32768):
    """Exact max over rows of C of squared NN distance to X.

    A shallow prescan scores every candidate by its distance to the first
    few design points; candidates are then processed best-first in chunks,
    and the running maximum prunes candidates that provably cannot win.
    The returned value equals the full brute-force max-min exactly.
    """
    n = X.shape[0]
    xsq = np.einsum("ij,ij->i", X, X)
    if n <= prescan or C.shape[0] <= warm:
        return float(_exact_min_sq(C, X, xsq).max())
    csq = np.einsum("ij,ij->i", C, C)
    k0 = prescan
    T = C @ X[:k0].T
    T *= -2.0
    T += xsq[:k0][None, :]
    m = T.min(axis=1)
    m += csq
    order = np.argsort(-m, kind="stable")
    h2 = float(_exact_min_sq(C[order[:warm]], X, xsq).max())
    rest = order[warm:]
    rest = rest[m[rest] > h2]
    for s in range(0, rest.shape[0], chunk):
        idx = rest[s:s + chunk]
        idx = idx[m[idx] > h2]
        if idx.shape[0] == 0:
            continue
        c = C[idx]
        cs = csq[idx]
        mm = m[idx] - cs
        j, b = k0, k0
        while j < n and idx.shape[0]:
            # finish small tails in one shot instead of many tiny blocks
            if idx.shape[0] * (n - j) <= 262144:
                b = n - j
            k = min(b, n - j)
            T = c @ X[j:j + k].T
            T *= -2.0
            T += xsq[j:j + k][None, :]
            np.minimum(mm, T.min(axis=1), out=mm)
            alive = (mm + cs) > h2
            if alive.mean() < 0.7:
                keep = np.flatnonzero(alive)
                idx, c, cs, mm = idx[keep], c[keep], cs[keep], mm[keep]
            j += k
            b = min(2 * b, 4096)
        if idx.shape[0]:
            h2 = max(h2, float((mm + cs).max()))
    return h2


def fill_distance_estimate(X, domain, candidates):
    """Max over candidates c of the distance from c to its nearest design point.

    For Domain.SORTED_SIMPLEX both the design and the candidates are mapped
    through the sort canonicalization first, so the value is
    max_c min_i ||sort c - sort x_i||. The result is an exact max-min over
    the given finite candidate set, hence a lower estimate of the true
    supremum over the continuous domain, converging as candidates densify.
    """
    X = np.asarray(X, dtype=float)
    C = np.asarray(candidates, dtype=float)
    if X.ndim != 2 or C.ndim != 2:
        raise DimensionMismatchError("design and candidates must be (n, d) arrays")
    if C.shape[0] == 0:
        raise ConfigError("candidate set is empty")
    if X.shape[1] != C.shape[1]:
        raise DimensionMismatchError(
            f"dimension mismatch: design d={X.shape[1]}, candidates d={C.shape[1]}")
    if not isinstance(domain, Domain):
        raise ConfigError(f"unknown domain {domain!r}")
    if domain is Domain.SORTED_SIMPLEX:
        X = sort_points(X)
        C = sort_points(C)
    else:
        X = np.ascontiguousarray(X)
        C = np.ascontiguousarray(C)
    if X.shape[1] <= _TREE_MAX_DIM:
        dist, _ = cKDTree(X).query(C, k=1)
        return float(dist.max())
    return float(math.sqrt(max(_maxmin_sq_pruned(X, C), 0.0)))


def covering_design(epsilon, d, domain, cap=10 ** 7):
    """Deterministic design whose fill distance over the domain is <= epsilon.

    Cube: the centers of a regular grid with at least 2 cells per axis and
    spacing at most 2*epsilon/sqrt(d), so every cube point lies within the
    half-diagonal epsilon of a center. SortedSimplex: the sorted-distinct
    subset of the same grid, enumerated directly as multisets of cell
    levels (roughly 1/d! as many points), which covers the simplex in the
    sorted metric by the rearrangement principle.
    """
    if not (0.0 < epsilon < 1.0):
        raise ConfigError(f"epsilon must lie in (0, 1), got {epsilon}")
    if d < 1:
        raise ConfigError(f"dimension must be >= 1, got {d}")
    if not isinstance(domain, Domain):
        raise ConfigError(f"unknown domain {domain!r}")
    q = max(2, math.ceil(math.sqrt(d) / (2.0 * epsilon) - 1e-9))
    if domain is Domain.CUBE:
        count = q ** d
        if count > cap:
            raise CapExceededError(
                f"covering grid needs {count} points, above the cap {cap}")
        idx = np.indices((q,) * d).reshape(d, -1).T
        return (idx + 0.5) / q
    # multisets of d cell levels, i.e. the grid's distinct sorted rows
    count = math.comb(q + d - 1, d)
    if count > cap:
        raise CapExceededError(
            f"simplex covering needs {count} points, above the cap {cap}")
    from itertools import combinations_with_replacement
    levels = np.array(list(combinations_with_replacement(range(q), d)), dtype=float)
    return (levels[:, ::-1] + 0.5) / q


def cone_parameters(d, domain):
    """Interior cone parameters of the domain.

    Cube: theta = arcsin(1/sqrt(d)), radius 1/2. SortedSimplex:
    theta = arcsin(1/d^{3/2}), radius 1/(2d+2). At d=1 both angles
    degenerate to pi/2 and are clamped just below it.
    """
    if d < 1:
        raise ConfigError(f"dimension must be >= 1, got {d}")
    if domain is Domain.CUBE:
        theta = math.asin(1.0 / math.sqrt(d))
        radius = 0.5
    elif domain is Domain.SORTED_SIMPLEX:
        theta = math.asin(d ** -1.5)
        radius = 1.0 / (2.0 * d + 2.0)
    else:
        raise ConfigError(f"unknown domain {domain!r}")
    theta = min(theta, math.pi / 2 - 1e-9)
    return ConeParams(theta=theta, radius=radius)


def cone_condition_holds(h, nu, d, domain):
    """Whether the fill distance is small enough for the error theorems.

    Cube: floor(1/(8 nu^2 (sqrt(d)+1) h)) > 1.
    SortedSimplex: floor(1/(8 nu^2 (d+1) (d^{3/2}+1) h)) > 1.
    """
    if h <= 0.0:
        raise ConfigError(f"fill distance must be positive, got {h}")
    if nu < 1:
        raise ConfigError(f"smoothness degree must be >= 1, got {nu}")
    if domain is Domain.CUBE:
        scale = 8.0 * nu * nu * (math.sqrt(d) + 1.0) * h
    elif domain is Domain.SORTED_SIMPLEX:
        scale = 8.0 * nu * nu * (d + 1.0) * (d ** 1.5 + 1.0) * h
    else:
        raise ConfigError(f"unknown domain {domain!r}")
    return math.floor(1.0 / scale) > 1
