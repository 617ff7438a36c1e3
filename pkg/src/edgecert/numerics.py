"""Dense symmetric eigenvalues and real roots of small polynomials."""

from __future__ import annotations

import math

import numpy as np

from . import _kernels
from .errors import NonConvergenceError

# Single comparison tolerance for eigenvalue-vs-threshold tests:
# "lam < T" means lam < T - EPS, "lam == T" means |lam - T| <= EPS.
EPS = 1e-9

JACOBI_REL_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100


def sym_matrix(entries) -> np.ndarray:
    """Validate and return ``entries`` as a float64 symmetric matrix."""
    m = np.array(entries, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError("expected a non-empty square matrix")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix is not exactly symmetric")
    return m


def sym_eigenvalues(m) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, nonincreasing.

    Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
    ``1e-13 * (1 + ||M||_F)``; raises :class:`NonConvergenceError` after 100 sweeps.
    """
    a = np.ascontiguousarray(sym_matrix(m))
    values, sweeps = _kernels.jacobi_eigenvalues(a, JACOBI_REL_TOL, JACOBI_MAX_SWEEPS)
    if sweeps < 0:
        raise NonConvergenceError(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")
    return np.sort(values)[::-1].copy()


def strictly_below(value: float, threshold: float, eps: float = EPS) -> bool:
    return value < threshold - eps


def equal_within(value: float, threshold: float, eps: float = EPS) -> bool:
    return abs(value - threshold) <= eps


def _cubic(x, c2, c1, c0):
    return ((x + c2) * x + c1) * x + c0


def largest_real_root_cubic(c2: float, c1: float, c0: float) -> float:
    """Largest real root of ``x**3 + c2*x**2 + c1*x + c0``.

    Bisection on a bracket where the cubic is increasing, then a Newton polish
    that is only accepted when it reduces the residual.
    """
    bound = 1.0 + max(abs(c2), abs(c1), abs(c0))
    lo, hi = -bound, bound
    # critical points of 3x^2 + 2 c2 x + c1
    disc = c2 * c2 - 3.0 * c1
    if disc >= 0.0:
        root = math.sqrt(disc)
        left = (-c2 - root) / 3.0
        right = (-c2 + root) / 3.0
        if _cubic(right, c2, c1, c0) <= 0.0:
            lo = right
        else:
            hi = left
    # invariant: f(lo) <= 0 < f(hi), f nondecreasing on [lo, hi]
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _cubic(mid, c2, c1, c0) <= 0.0:
            lo = mid
        else:
            hi = mid
    x = lo
    for _ in range(3):
        deriv = (3.0 * x + 2.0 * c2) * x + c1
        if deriv == 0.0:
            break
        step = x - _cubic(x, c2, c1, c0) / deriv
        if abs(_cubic(step, c2, c1, c0)) < abs(_cubic(x, c2, c1, c0)):
            x = step
        else:
            break
    return x
