"""Adaptive Dormand-Prince 5(4) integrator with dense output.

Explicit embedded pair, 5th-order propagation, FSAL. Output values at
requested sample times come from cubic Hermite interpolation on accepted
steps, so the integrator never has to hit sample times exactly. Fully
deterministic: identical inputs give bitwise-identical trajectories.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import StepUnderflow

# Dormand-Prince 5(4) tableau.
_C = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0])
_A = np.array([
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [1 / 5, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3 / 40, 9 / 40, 0.0, 0.0, 0.0, 0.0],
    [44 / 45, -56 / 15, 32 / 9, 0.0, 0.0, 0.0],
    [19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729, 0.0, 0.0],
    [9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656, 0.0],
])
# 5th-order weights (also the last tableau row: FSAL).
_B = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0])
# b - b_hat, local error estimate weights.
_E = np.array([
    71 / 57600, 0.0, -71 / 16695, 71 / 1920, -17253 / 339200, 22 / 525, -1 / 40,
])

_SAFETY = 0.9
_MIN_FACTOR = 0.2
_MAX_FACTOR = 5.0
_ORDER_EXP = 0.2  # 1/5


@dataclass(frozen=True)
class IntegratorOpts:
    """Tolerances, step bounds and the requested sample times.

    output_times must be non-decreasing; y0 is taken at output_times[0].
    max_step is typically set to 0.05 / omega_max by callers so the fastest
    oscillation stays resolved.
    """

    output_times: Sequence[float] | np.ndarray = field(default=())
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_step: float | None = None
    initial_step: float | None = None

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0.0 and self.abs_tol > 0.0):
            raise ValueError("tolerances must be positive")
        ts = np.asarray(self.output_times, dtype=float)
        if ts.ndim != 1 or ts.size < 1:
            raise ValueError("output_times must be a non-empty 1-d sequence")
        if np.any(np.diff(ts) < 0.0):
            raise ValueError("output_times must be non-decreasing")


def _initial_step(rhs, t0, y0, f0, rtol, atol, t_span, max_step):
    """Deterministic starting step from derivative magnitudes."""
    scale = atol + rtol * np.abs(y0)
    d0 = float(np.sqrt(np.mean((y0 / scale) ** 2)))
    d1 = float(np.sqrt(np.mean((f0 / scale) ** 2)))
    h0 = 1e-6 * t_span if (d0 < 1e-5 or d1 < 1e-5) else 0.01 * d0 / d1
    y1 = y0 + h0 * f0
    f1 = rhs(t0 + h0, y1)
    d2 = float(np.sqrt(np.mean(((f1 - f0) / scale) ** 2))) / h0
    if max(d1, d2) <= 1e-15:
        h1 = max(1e-6 * t_span, h0 * 1e-3)
    else:
        h1 = (0.01 / max(d1, d2)) ** _ORDER_EXP
    h = min(100.0 * h0, h1, t_span)
    if max_step is not None:
        h = min(h, max_step)
    return h


def _hermite(t, t0, h, y0, y1, f0, f1):
    """Cubic Hermite interpolant on one accepted step.

    Written relative to y0 so a constant solution interpolates exactly.
    """
    s = (t - t0) / h
    s2 = s * s
    s3 = s2 * s
    h10 = s3 - 2.0 * s2 + s
    h01 = -2.0 * s3 + 3.0 * s2
    h11 = s3 - s2
    return y0 + h01 * (y1 - y0) + (h10 * h) * f0 + (h11 * h) * f1


def integrate(
    rhs: Callable[[float, np.ndarray], np.ndarray],
    y0: Sequence[float] | np.ndarray,
    opts: IntegratorOpts,
    partial: bool = False,
) -> np.ndarray:
    """Integrate y' = rhs(t, y) and return samples at opts.output_times.

    Returns an array of shape (len(output_times), len(y0)). The local error
    per step is controlled to abs_tol + rel_tol * |y| by the embedded
    4th-order estimate. With partial=True a step-size underflow (e.g. the
    solution escaping to infinity) fills the remaining samples with NaN
    instead of raising, so the trajectory up to the failure is kept.
    """
    times = np.asarray(opts.output_times, dtype=float)
    y = np.array(y0, dtype=float).ravel()
    n = y.size
    out = np.empty((times.size, n))

    t = times[0]
    t_end = times[-1]
    out[0] = y
    next_out = 1
    while next_out < times.size and times[next_out] <= t:
        out[next_out] = y
        next_out += 1
    if next_out >= times.size:
        return out

    t_span = t_end - t
    f = np.asarray(rhs(t, y), dtype=float)
    if f.shape != y.shape:
        raise ValueError(f"rhs returned shape {f.shape}, expected {y.shape}")

    rtol, atol = opts.rel_tol, opts.abs_tol
    h = opts.initial_step or _initial_step(rhs, t, y, f, rtol, atol, t_span, opts.max_step)
    if opts.max_step is not None:
        h = min(h, opts.max_step)
    h_min = 1e-14 * t_span

    # k[0] holds the derivative at the step start (FSAL: copied from k[6]
    # after acceptance); buffers are reused across steps.
    k = np.empty((7, n))
    k[0] = f
    y = y.copy()
    y_stage = np.empty(n)
    y_new = np.empty(n)
    err_vec = np.empty(n)
    scale = np.empty(n)
    tmp = np.empty(n)
    while next_out < times.size:
        h = min(h, t_end - t)
        if h < h_min:
            if partial:
                out[next_out:] = np.nan
                return out
            raise StepUnderflow(f"step size {h} underflowed at t = {t}")

        for i in range(1, 6):
            np.dot(_A[i, :i], k[:i], out=y_stage)
            y_stage *= h
            y_stage += y
            k[i] = rhs(t + _C[i] * h, y_stage)
        np.dot(_B[:6], k[:6], out=y_new)
        y_new *= h
        y_new += y
        k[6] = rhs(t + h, y_new)

        np.dot(_E, k, out=err_vec)
        err_vec *= h
        np.abs(y, out=scale)
        np.abs(y_new, out=tmp)
        np.maximum(scale, tmp, out=scale)
        scale *= rtol
        scale += atol
        err_vec /= scale
        err = math.sqrt(float(err_vec @ err_vec) / n)

        if err <= 1.0:
            t_new = t + h
            while next_out < times.size and times[next_out] <= t_new:
                s = times[next_out]
                if s == t_new:
                    out[next_out] = y_new
                else:
                    out[next_out] = _hermite(s, t, h, y, y_new, k[0], k[6])
                next_out += 1
            t = t_new
            y, y_new = y_new, y
            k[0] = k[6]
            factor = _MAX_FACTOR if err == 0.0 else min(
                _MAX_FACTOR, max(_MIN_FACTOR, _SAFETY * err ** -_ORDER_EXP)
            )
            h *= factor
        else:
            h *= max(_MIN_FACTOR, _SAFETY * err ** -_ORDER_EXP)
        if opts.max_step is not None:
            h = min(h, opts.max_step)

    return out
