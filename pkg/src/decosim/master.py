"""Perturbative time-local master equation for the reduced system oscillator.

Noise and dissipation kernels, the four time-dependent coefficients in closed
form (with the exact limiting form at resonance and a quadrature oracle), and
the two equivalent ODE formulations: one for the density-matrix exponent
coefficients, one directly for the correlator triple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .errors import ResonantDivergence
from .exact import ModelParams
from .gaussian import CorrelatorTriple, GaussianCoeffs1D
from .ode import IntegratorOpts, integrate

_EPS_RES_DEFAULT = 1e-12


def _coth_factors(params: ModelParams, beta: float) -> np.ndarray:
    """coth(beta omega_n / 2) per mode; exactly 1 at T = 0 (beta = inf)."""
    if math.isinf(beta):
        return np.ones(params.n_env)
    return 1.0 / np.tanh(0.5 * beta * np.asarray(params.omegas))


@dataclass(frozen=True)
class Kernels:
    """Noise kernel nu(t) and dissipation kernel eta(t) of the environment."""

    omegas: np.ndarray
    lambdas: np.ndarray
    coths: np.ndarray

    def nu(self, t: float) -> float:
        w = self.omegas
        return float(np.sum(self.lambdas**2 * np.cos(w * t) / (2.0 * w) * self.coths))

    def eta(self, t: float) -> float:
        w = self.omegas
        return float(np.sum(self.lambdas**2 * np.sin(w * t) / (2.0 * w)))


def kernels(params: ModelParams, beta: float) -> Kernels:
    return Kernels(
        omegas=np.asarray(params.omegas),
        lambdas=np.asarray(params.lambdas),
        coths=_coth_factors(params, beta),
    )


@dataclass(frozen=True)
class MasterCoeffs:
    """The four time-dependent coefficients at one instant.

    omega2_shift is the frequency renormalization Omega^2(t), gamma the
    damping, big_d and f the regular and anomalous diffusion. All vanish at
    t = 0 and scale quadratically with the couplings.
    """

    omega2_shift: float
    gamma: float
    big_d: float
    f: float


def effective_coupling(params: ModelParams, n: int, eps_res: float = _EPS_RES_DEFAULT) -> float:
    """lambda_n / (omega0^2 - omega_n^2); diverges in the resonant regime."""
    w0sq = params.omega0**2
    den = w0sq - params.omegas[n] ** 2
    if abs(den) < eps_res * w0sq:
        raise ResonantDivergence(
            f"mode {n} at omega = {params.omegas[n]} is resonant with omega0 = {params.omega0}"
        )
    return params.lambdas[n] / den


def master_coeffs_closed_form(params: ModelParams, beta: float, t: float,
                              eps_res: float = _EPS_RES_DEFAULT) -> MasterCoeffs:
    """Closed-form coefficient sums; raises at (near-)resonant modes."""
    w0 = params.omega0
    w = np.asarray(params.omegas)
    lam2 = np.asarray(params.lambdas) ** 2
    den = w0**2 - w**2
    if np.any(np.abs(den) < eps_res * w0**2):
        raise ResonantDivergence("closed forms are singular for omega_n ~ omega0")
    coths = _coth_factors(params, beta)
    c0, s0 = math.cos(w0 * t), math.sin(w0 * t)
    cn, sn = np.cos(w * t), np.sin(w * t)
    omega2 = float(np.sum(-lam2 / (w * den) * (w * (c0 * cn - 1.0) + w0 * s0 * sn)))
    gamma = float(np.sum(lam2 / (2.0 * w0 * w * den) * (w * cn * s0 - w0 * c0 * sn)))
    big_d = float(np.sum(lam2 * coths / (2.0 * w * den) * (w0 * cn * s0 - w * c0 * sn)))
    f = float(np.sum(lam2 * coths / (2.0 * w0 * w * den) * (w0 * (c0 * cn - 1.0) + w * s0 * sn)))
    return MasterCoeffs(omega2_shift=omega2, gamma=gamma, big_d=big_d, f=f)


def _resonant_limit(w0: float, lam2: float, coth_f: float, t: float) -> MasterCoeffs:
    """Exact per-mode coefficient integrals at omega_n = omega0.

    gamma and D grow linearly in t here; this is the secular growth that the
    closed forms hide behind a 0/0.
    """
    s = math.sin(w0 * t)
    s2 = math.sin(2.0 * w0 * t)
    omega2 = -lam2 * s * s / (2.0 * w0**2)
    gamma = lam2 / (2.0 * w0**2) * (0.5 * t - s2 / (4.0 * w0))
    big_d = lam2 * coth_f / (2.0 * w0) * (0.5 * t + s2 / (4.0 * w0))
    f = -lam2 * coth_f * s * s / (4.0 * w0**3)
    return MasterCoeffs(omega2_shift=omega2, gamma=gamma, big_d=big_d, f=f)


def master_coeffs(params: ModelParams, beta: float, t: float,
                  eps_res: float = _EPS_RES_DEFAULT) -> MasterCoeffs:
    """Coefficients at time t; resonant modes use their analytic limiting form."""
    w0 = params.omega0
    w = np.asarray(params.omegas)
    resonant = np.abs(w0**2 - w**2) < eps_res * w0**2
    if not np.any(resonant):
        return master_coeffs_closed_form(params, beta, t, eps_res)
    coths = _coth_factors(params, beta)
    lam = np.asarray(params.lambdas)
    omega2 = gamma = big_d = f = 0.0
    if not np.all(resonant):
        idx = ~resonant
        sub = ModelParams(omega0=w0, omegas=tuple(w[idx]), lambdas=tuple(lam[idx]))
        reg = master_coeffs_closed_form(sub, beta, t, eps_res)
        omega2, gamma, big_d, f = reg.omega2_shift, reg.gamma, reg.big_d, reg.f
    for i in np.nonzero(resonant)[0]:
        part = _resonant_limit(w0, lam[i] ** 2, coths[i], t)
        omega2 += part.omega2_shift
        gamma += part.gamma
        big_d += part.big_d
        f += part.f
    return MasterCoeffs(omega2_shift=omega2, gamma=gamma, big_d=big_d, f=f)


def master_coeffs_quadrature(params: ModelParams, beta: float, t: float,
                             tol: float = 1e-12) -> MasterCoeffs:
    """Adaptive quadrature of the defining integrals; oracle for the closed forms."""
    ker = kernels(params, beta)
    w0 = params.omega0
    if t == 0.0:
        return MasterCoeffs(0.0, 0.0, 0.0, 0.0)
    limit = max(200, int(50 * t * params.omega_max))

    def integral(fn):
        val, _ = quad(fn, 0.0, t, epsabs=tol, epsrel=tol, limit=limit)
        return val

    omega2 = -2.0 * integral(lambda u: ker.eta(u) * math.cos(w0 * u))
    gamma = integral(lambda u: ker.eta(u) * math.sin(w0 * u) / w0)
    big_d = integral(lambda u: ker.nu(u) * math.cos(w0 * u))
    f = -integral(lambda u: ker.nu(u) * math.sin(w0 * u) / w0)
    return MasterCoeffs(omega2_shift=omega2, gamma=gamma, big_d=big_d, f=f)


def master_correlator_rhs(params: ModelParams, beta: float, t: float,
                          c: CorrelatorTriple) -> tuple[float, float, float]:
    """d/dt of (<x^2>, <p^2>, <{x,p}>/2) under the reduced evolution.

    No physicality guard: runs continue through Delta^2 < 1 so the breakdown
    time can be recorded.
    """
    co = master_coeffs(params, beta, t)
    w_eff = params.omega0**2 + co.omega2_shift
    dxx = 2.0 * c.xp
    dpp = -2.0 * w_eff * c.xp - 4.0 * co.gamma * c.pp + 2.0 * co.big_d
    dxp = -w_eff * c.xx + c.pp - co.f - 2.0 * co.gamma * c.xp
    return dxx, dpp, dxp


def master_coeff_ode_rhs(params: ModelParams, beta: float, t: float,
                         g: tuple[float, float, float, float]) -> tuple[float, float, float, float]:
    """d/dt of (a_R, a_I, c, ln N) for the reduced density-matrix exponent."""
    ar, ai, c, _logn = g
    co = master_coeffs(params, beta, t)
    w_eff_half = 0.5 * (params.omega0**2 + co.omega2_shift)
    dar = 4.0 * ai * ar - 2.0 * co.gamma * (ar + c) + co.big_d - 2.0 * co.f * ai
    dai = 2.0 * (ai**2 - ar**2 + c**2) + w_eff_half - 2.0 * co.gamma * ai + 2.0 * co.f * (ar - c)
    dc = 4.0 * ai * c - 2.0 * co.gamma * (ar + c) + co.big_d - 2.0 * co.f * ai
    dlogn = 2.0 * ai
    return dar, dai, dc, dlogn


def evolve_master_correlators(
    params: ModelParams, beta: float, c0: CorrelatorTriple, opts: IntegratorOpts,
    partial: bool = True,
) -> np.ndarray:
    """Integrate the correlator form; returns rows (xx, pp, xp) per sample time.

    partial=True keeps the trajectory up to a destabilization-driven
    integrator failure, padding the tail with NaN.
    """

    def rhs(t, y):
        return np.array(
            master_correlator_rhs(params, beta, t, CorrelatorTriple(*y))
        )

    return integrate(rhs, np.array([c0.xx, c0.pp, c0.xp]), opts, partial=partial)


def evolve_master_coeffs(
    params: ModelParams, beta: float, g0: GaussianCoeffs1D, opts: IntegratorOpts,
    partial: bool = True,
) -> np.ndarray:
    """Integrate the coefficient form; returns rows (a_R, a_I, c, ln N)."""

    def rhs(t, y):
        return np.array(master_coeff_ode_rhs(params, beta, t, tuple(y)))

    y0 = np.array([g0.a_r, g0.a_i, g0.c, g0.log_norm])
    return integrate(rhs, y0, opts, partial=partial)
