"""Sequence acceleration for oscillatory series, vectorized over points.

The workhorse is the Levin u-transform applied to the partial sums of a
tail sum_{n>=0} t_n.  The transform table is built column-by-column with
the standard two-term recursion; both numerator and denominator rows are
kept so the estimate at order k is num[0]/den[0] after k updates.

All arrays carry a trailing "points" axis so a whole grid of series (one
per evaluation point) is accelerated in a single pass.  Convergence is
tracked per point through the stabilization of successive transform
orders; the returned error estimate is a small safety multiple of the last
two differences.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from .errors import AccelerationFailureError

__all__ = ["levin_sum", "LevinResult"]

_SAFETY = 8.0
_TINY = 1e-300


class LevinResult:
    """Value/error pair for a batch of accelerated sums."""

    __slots__ = ("value", "error", "orders")

    def __init__(self, value: np.ndarray, error: np.ndarray, orders: int):
        self.value = value
        self.error = error
        self.orders = orders


def levin_sum(
    term_fn: Callable[[int], np.ndarray],
    shape: tuple[int, ...],
    tol: float,
    max_order: int = 80,
    beta: float = 1.0,
    min_order: int = 6,
) -> LevinResult:
    """Accelerate sum_{n>=0} term_fn(n) with the Levin u-transform.

    ``term_fn(n)`` must return the n-th term as an array of ``shape``.
    Raises :class:`AccelerationFailureError` when the worst point fails to
    stabilize below ``tol`` within ``max_order`` terms; the partially
    converged value and estimate ride along on the exception.
    """
    num = np.zeros((max_order,) + shape, dtype=np.complex128)
    den = np.zeros((max_order,) + shape, dtype=np.complex128)
    partial = np.zeros(shape, dtype=np.complex128)

    best = np.zeros(shape, dtype=np.complex128)
    err = np.full(shape, np.inf)
    prev1 = None
    prev2 = None

    for n in range(max_order):
        t_n = np.asarray(term_fn(n), dtype=np.complex128)
        partial = partial + t_n
        omega = (beta + n) * t_n
        omega = np.where(np.abs(omega) < _TINY, _TINY, omega)
        num[n] = partial / omega
        den[n] = 1.0 / omega
        for k in range(1, n + 1):
            j = n - k
            if k == 1:
                factor = 1.0
            else:
                base = (beta + j + k - 1.0) / (beta + j + k)
                factor = (beta + j) / (beta + j + k) * base ** (k - 2)
            num[j] = num[j + 1] - factor * num[j]
            den[j] = den[j + 1] - factor * den[j]
        if n < 2:
            continue
        d0 = np.where(np.abs(den[0]) < _TINY, _TINY, den[0])
        val = num[0] / d0
        if prev1 is not None and prev2 is not None:
            step = np.maximum(np.abs(val - prev1), np.abs(prev1 - prev2))
            est = _SAFETY * step + 1e-16 * np.abs(val)
            improved = est < err
            best = np.where(improved, val, best)
            err = np.where(improved, est, err)
            if n >= min_order and err.max() <= tol:
                return LevinResult(best, err, n + 1)
        prev2 = prev1
        prev1 = val

    raise AccelerationFailureError(
        f"Levin transform did not stabilize below {tol:g} within "
        f"{max_order} terms (worst estimate {err.max():g})",
        value=best,
        error_estimate=err,
    )
