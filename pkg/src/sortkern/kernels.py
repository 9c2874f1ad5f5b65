"""Kernel families, symmetrization modes, Gram assembly, derivative constants.

Four evaluation modes turn a base kernel into a permutation-aware one:
Plain leaves it untouched, Sorted canonicalizes both arguments through the
descending sort, PermDouble averages over all (d!)^2 permutation pairs,
and PermSingle averages over d! permutations of one argument (equivalent
to PermDouble for isotropic kernels such as the Gaussian).
"""

import math
from dataclasses import dataclass
from enum import Enum
from itertools import permutations

import numpy as np
from numpy.polynomial import hermite_e

from .errors import CapExceededError, ConfigError, DimensionMismatchError, DuplicateOrbitError
from .geometry import distinct_orbits, sort_points

PERM_SINGLE_DIM_CAP = 6
PERM_DOUBLE_DIM_CAP = 4

_HERMITE_GRID = 20001  # 1-D maximization grid on [-1, 1]
_SAFETY = 1.01


class KernelFamily(Enum):
    GAUSSIAN = "gaussian"


class KernelMode(Enum):
    PLAIN = "plain"
    SORTED = "sorted"
    PERM_DOUBLE = "perm_double"
    PERM_SINGLE = "perm_single"


@dataclass(frozen=True)
class KernelSpec:
    """Base kernel: family with amplitude, length-scale, and smoothness degree.

    The Gaussian is amplitude * exp(-||w - z||^2 / (2 bandwidth^2)). The
    smoothness degree nu only enters the theoretical bounds; the Gaussian
    itself is smooth of every order.
    """

    amplitude: float
    bandwidth: float
    nu: int = 2
    family: KernelFamily = KernelFamily.GAUSSIAN

    def __post_init__(self):
        if self.family is not KernelFamily.GAUSSIAN:
            raise ConfigError(f"unsupported kernel family {self.family!r}")
        if self.amplitude <= 0.0:
            raise ConfigError(f"amplitude must be positive, got {self.amplitude}")
        if self.bandwidth <= 0.0:
            raise ConfigError(f"bandwidth must be positive, got {self.bandwidth}")
        if self.nu < 1:
            raise ConfigError(f"smoothness degree must be >= 1, got {self.nu}")


def check_mode_cap(mode, d):
    """Raise if the averaged mode's factorial term count is over its cap."""
    if mode is KernelMode.PERM_SINGLE and d > PERM_SINGLE_DIM_CAP:
        raise CapExceededError(
            f"PermSingle averages d! terms; d={d} exceeds the cap {PERM_SINGLE_DIM_CAP}")
    if mode is KernelMode.PERM_DOUBLE and d > PERM_DOUBLE_DIM_CAP:
        raise CapExceededError(
            f"PermDouble averages (d!)^2 terms; d={d} exceeds the cap {PERM_DOUBLE_DIM_CAP}")


def _pairwise_sq(A, B):
    # per-coordinate accumulation: (a-b)^2 terms are bitwise symmetric in (a,b)
    D = np.zeros((A.shape[0], B.shape[0]))
    for k in range(A.shape[1]):
        diff = A[:, k, None] - B[None, :, k]
        D += diff * diff
    return D


def _gauss(k, D2):
    return k.amplitude * np.exp(D2 / (-2.0 * k.bandwidth * k.bandwidth))


def _all_perms(X):
    # rows of X expanded to every coordinate permutation: (n, d!, d)
    d = X.shape[1]
    perms = np.array(list(permutations(range(d))))
    return X[:, perms.T].transpose(0, 2, 1)


def kernel_cross(k, mode, W, Z):
    """All pairwise kernel values between the rows of W and the rows of Z."""
    W = np.asarray(W, dtype=float)
    Z = np.asarray(Z, dtype=float)
    if W.ndim != 2 or Z.ndim != 2:
        raise DimensionMismatchError("kernel_cross expects (n, d) arrays")
    if W.shape[1] != Z.shape[1]:
        raise DimensionMismatchError(
            f"dimension mismatch: {W.shape[1]} vs {Z.shape[1]}")
    d = W.shape[1]
    check_mode_cap(mode, d)
    if mode is KernelMode.PLAIN:
        return _gauss(k, _pairwise_sq(W, Z))
    if mode is KernelMode.SORTED:
        return _gauss(k, _pairwise_sq(sort_points(W), sort_points(Z)))
    # averaged modes are permutation-invariant argument-wise, so inputs are
    # canonicalized first; the sum then runs over the identical term multiset
    # for any permutation of w or z, making the invariance exact in floats
    if mode is KernelMode.PERM_SINGLE:
        PW = _all_perms(sort_points(W))
        Zc = sort_points(Z)
        out = np.zeros((W.shape[0], Z.shape[0]))
        for j in range(PW.shape[1]):
            out += _gauss(k, _pairwise_sq(PW[:, j], Zc))
        return out / PW.shape[1]
    PW, PZ = _all_perms(sort_points(W)), _all_perms(sort_points(Z))
    nf = PW.shape[1]
    out = np.zeros((W.shape[0], Z.shape[0]))
    for a in range(nf):
        for b in range(nf):
            out += _gauss(k, _pairwise_sq(PW[:, a], PZ[:, b]))
    return out / (nf * nf)


def kernel_value(k, mode, w, z):
    """Single kernel evaluation between two points."""
    w = np.atleast_2d(np.asarray(w, dtype=float))
    z = np.atleast_2d(np.asarray(z, dtype=float))
    return float(kernel_cross(k, mode, w, z)[0, 0])


def gram(k, mode, X):
    """Kernel matrix of a design against itself.

    The result is exactly symmetric: each unordered pair's value is stored
    once and mirrored. Sorted mode requires pairwise-distinct orbits and
    reports duplicates before any factorization is attempted.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[0] < 1:
        raise DimensionMismatchError(f"design must be an (n, d) array, got shape {X.shape}")
    check_mode_cap(mode, X.shape[1])
    if mode is KernelMode.SORTED and not distinct_orbits(X):
        raise DuplicateOrbitError(
            "design has points in the same permutation orbit; the sorted "
            "kernel matrix would be singular")
    G = kernel_cross(k, mode, X, X)
    il = np.tril_indices(X.shape[0], -1)
    G[il] = G.T[il]
    return G


def _partitions(total, max_parts, _cap=None):
    # integer partitions of `total` into at most `max_parts` positive parts
    if _cap is None:
        _cap = total
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, _cap), 0, -1):
        for rest in _partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


def _derivative_envelope(g, sigma):
    # max over t in [-1,1] of |d^g/dt^g exp(-t^2/(2 sigma^2))|
    # = sigma^{-g} |He_g(t/sigma)| exp(-t^2/(2 sigma^2)) via Hermite polynomials
    t = np.linspace(-1.0, 1.0, _HERMITE_GRID)
    coeffs = np.zeros(g + 1)
    coeffs[g] = 1.0
    vals = np.abs(hermite_e.hermeval(t / sigma, coeffs)) * np.exp(-t * t / (2.0 * sigma * sigma))
    return float(vals.max()) / sigma ** g


def sup_kernel_constant(k, nu, d):
    """Sup-norm constants (C_K0, C_Knu) of the kernel and its derivatives.

    C_K0 is the maximum of |K| over the cube squared (the amplitude, for
    the Gaussian). C_Knu is the maximum over all mixed derivatives of
    total order nu of |d^alpha_1 d^beta_2 K| / (alpha! beta!). The
    Gaussian factorizes per coordinate, so the maximum reduces to integer
    partitions of nu with per-order 1-D envelopes; the grid maximum
    carries a 1.01 safety factor.
    """
    if nu < 0:
        raise ConfigError(f"nu must be >= 0, got {nu}")
    if d < 1:
        raise ConfigError(f"dimension must be >= 1, got {d}")
    if k.family is not KernelFamily.GAUSSIAN:
        raise ConfigError(f"unsupported kernel family {k.family!r}")
    c0 = k.amplitude
    if nu == 0:
        return c0, c0
    env = {g: _derivative_envelope(g, k.bandwidth) for g in range(1, nu + 1)}
    best = 0.0
    for part in _partitions(nu, d):
        prod = 1.0
        for g in part:
            # best split a + b = g of 1/(a! b!) puts the orders half and half
            prod *= env[g] / (math.factorial(g // 2) * math.factorial((g + 1) // 2))
        best = max(best, prod)
    return c0, c0 * _SAFETY * best
