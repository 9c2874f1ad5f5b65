"""Minimal-norm kernel interpolation and invariant ground-truth targets.

The fitted interpolant is f(x) = sum_i coeffs[i] * K_mode(x, x_i) with
coefficients solving the Gram system K_mode(X, X) pi = y, the unique
minimal-RKHS-norm interpolant of the data. Ground-truth targets are
finite atom combinations in the permutation-invariant RKHS, so their
norm is exactly computable and every theoretical bound can be evaluated
against a known quantity.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from .errors import DimensionMismatchError, FactorizationError
from .geometry import as_design, sort_points
from .kernels import KernelMode, KernelSpec, check_mode_cap, gram, kernel_cross
from .rng import stream

# diagonal jitter escalation, relative to mean diagonal magnitude
_JITTER_LADDER = (0.0, 1e-12, 1e-11, 1e-10, 1e-9, 1e-8, 1e-7, 1e-6)
_RESIDUAL_TOL = 1e-8
_EVAL_CHUNK = 4096


@dataclass(frozen=True)
class Interpolant:
    """Fitted minimal-norm interpolant (immutable)."""

    kernel: KernelSpec
    mode: KernelMode
    design: np.ndarray
    coeffs: np.ndarray
    jitter_used: float


@dataclass(frozen=True)
class InvariantTarget:
    """Permutation-invariant target with exactly known RKHS norm.

    The target value at x is sum_j weights[j] * K_perm(x, atoms[j]) where
    K_perm is the permutation-averaged kernel, so the squared RKHS norm is
    the quadratic form weights' K_perm(Z, Z) weights.
    """

    atoms: np.ndarray
    weights: np.ndarray
    kernel: KernelSpec
    norm_sq: float

    def value(self, x):
        """Target values at a point (scalar) or at rows of an array."""
        x = np.asarray(x, dtype=float)
        single = x.ndim == 1
        X = np.atleast_2d(x)
        out = kernel_cross(self.kernel, KernelMode.PERM_SINGLE, X, self.atoms) @ self.weights
        return float(out[0]) if single else out


def fit(k, mode, X, y):
    """Solve the Gram system for the minimal-norm interpolant.

    The Gram matrix is factorized by Cholesky; if that fails, a diagonal
    jitter delta * trace(G)/n is added with delta escalating from 1e-12
    to 1e-6 in decade steps. The accepted solution must reproduce the
    data through the unjittered matrix to within 1e-8 * (1 + max|y|);
    jitter_used records the diagonal shift actually applied.
    """
    X = as_design(X)
    y = np.asarray(y, dtype=float)
    if y.ndim != 1 or y.shape[0] != X.shape[0]:
        raise DimensionMismatchError(
            f"y must have one value per design point, got {y.shape} for n={X.shape[0]}")
    if not np.all(np.isfinite(y)):
        raise FactorizationError("y contains non-finite values")
    G = gram(k, mode, X)
    n = X.shape[0]
    scale = np.trace(G) / n
    tol = _RESIDUAL_TOL * (1.0 + float(np.max(np.abs(y))))
    last_err = None
    for delta in _JITTER_LADDER:
        shift = delta * scale
        try:
            cf = cho_factor((G + shift * np.eye(n)) if shift else G, lower=True)
        except LinAlgError as e:
            last_err = e
            continue
        coeffs = cho_solve(cf, y)
        resid = float(np.max(np.abs(G @ coeffs - y)))
        if resid <= tol:
            return Interpolant(kernel=k, mode=mode, design=X, coeffs=coeffs,
                               jitter_used=shift)
        last_err = f"residual {resid:.3e} above tolerance {tol:.3e} at jitter {shift:.3e}"
    diag = np.diag(G)
    raise FactorizationError(
        "Gram factorization failed at maximum jitter "
        f"(n={n}, diag range [{diag.min():.3e}, {diag.max():.3e}]): {last_err}")


def evaluate(f, x):
    """Interpolant value at a point (scalar) or at rows of an array."""
    x = np.asarray(x, dtype=float)
    single = x.ndim == 1
    X = np.atleast_2d(x)
    if X.shape[1] != f.design.shape[1]:
        raise DimensionMismatchError(
            f"dimension mismatch: point d={X.shape[1]}, design d={f.design.shape[1]}")
    out = np.empty(X.shape[0])
    for s in range(0, X.shape[0], _EVAL_CHUNK):
        out[s:s + _EVAL_CHUNK] = (
            kernel_cross(f.kernel, f.mode, X[s:s + _EVAL_CHUNK], f.design) @ f.coeffs)
    return float(out[0]) if single else out


def interpolant_norm_sq(f):
    """Squared RKHS norm of the interpolant, coeffs' G coeffs."""
    G = gram(f.kernel, f.mode, f.design)
    return float(f.coeffs @ G @ f.coeffs)


def make_invariant_target(k, d, m, seed):
    """Random invariant target: m kernel atoms at sorted-uniform centers.

    Centers are uniform cube draws mapped to the simplex by sorting;
    weights are uniform in [-1, 1]. The permutation averaging uses the
    single-sum form, valid for the isotropic Gaussian.
    """
    check_mode_cap(KernelMode.PERM_SINGLE, d)
    g = stream(seed)
    atoms = sort_points(g.random((m, d)))
    weights = g.uniform(-1.0, 1.0, m)
    Gz = gram(k, KernelMode.PERM_SINGLE, atoms)
    norm_sq = max(float(weights @ Gz @ weights), 0.0)
    return InvariantTarget(atoms=atoms, weights=weights, kernel=k, norm_sq=norm_sq)


def l2_error(target, f, mc_samples, seed):
    """Monte Carlo L2(Unif) distance between target and interpolant.

    Returns (rmse, stderr): the square root of the mean squared pointwise
    difference over mc_samples seeded uniform cube points, and the
    delta-method standard error of that square root.
    """
    if mc_samples < 1:
        raise DimensionMismatchError(f"mc_samples must be >= 1, got {mc_samples}")
    d = f.design.shape[1]
    g = stream(seed)
    X = g.random((mc_samples, d))
    diff = target.value(X) - evaluate(f, X)
    sq = diff * diff
    mean = float(sq.mean())
    rmse = mean ** 0.5
    if mc_samples > 1 and rmse > 0.0:
        se_mean = float(sq.std(ddof=1)) / mc_samples ** 0.5
        stderr = se_mean / (2.0 * rmse)
    else:
        stderr = 0.0
    return rmse, stderr
