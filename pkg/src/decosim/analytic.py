"""Closed-form solution for one system oscillator coupled to one environment
oscillator.

Diagonalizes the 2x2 frequency matrix, carries the ten initial mode-amplitude
correlators, and evaluates the three two-time statistical propagators F_x,
F_q, F_xq together with their exact partial derivatives. Works for arbitrary
Gaussian initial data, including entangled states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

import numpy as np

from . import gaussian
from .errors import InvertedOscillator, UnphysicalState
from .gaussian import CorrelatorTriple, PhaseSpaceArea


@dataclass(frozen=True)
class NormalModeBasis:
    """Normal-mode frequencies (omega_bar0 <= omega_bar1) and rotation angle."""

    omega_bar0: float
    omega_bar1: float
    theta: float

    @property
    def cos2t(self) -> float:
        return math.cos(2.0 * self.theta)

    @property
    def sin2t(self) -> float:
        return math.sin(2.0 * self.theta)

    def rotation(self) -> np.ndarray:
        c, s = math.cos(self.theta), math.sin(self.theta)
        return np.array([[c, -s], [s, c]])


def diagonalize(omega0: float, omega1: float, lam: float) -> NormalModeBasis:
    """Normal modes of the coupled pair.

    omega_bar{0,1}^2 = (omega0^2 + omega1^2)/2 -/+ sqrt((omega1^2-omega0^2)^2
    + 4 lam^2)/2. Stability requires lam <= omega0*omega1. The angle is the
    half two-argument arctangent of (sin 2theta, cos 2theta), continuous in
    lam with theta(0) = 0 for omega1 > omega0 and theta = pi/4 at degeneracy.
    """
    if abs(lam) > omega0 * omega1:
        raise InvertedOscillator(
            f"lambda = {lam} exceeds stability bound omega0*omega1 = {omega0 * omega1}"
        )
    diff = omega1**2 - omega0**2
    disc = math.hypot(diff, 2.0 * lam)
    half_sum = 0.5 * (omega0**2 + omega1**2)
    wb0_sq = half_sum - 0.5 * disc
    wb1_sq = half_sum + 0.5 * disc
    theta = 0.5 * math.atan2(2.0 * lam, diff) if disc > 0.0 else 0.0
    return NormalModeBasis(
        omega_bar0=math.sqrt(wb0_sq), omega_bar1=math.sqrt(wb1_sq), theta=theta
    )


@dataclass(frozen=True)
class InitialConditions10:
    """The ten equal-time expectation values at t0.

    xpx and qpq are the full anticommutators <{x, p_x}> and <{q, p_q}>; the
    six cross moments involve commuting operators and need no symmetrization.
    """

    xx: float
    qq: float
    xq: float
    pxpx: float
    pqpq: float
    pxpq: float
    xpx: float
    qpq: float
    xpq: float
    qpx: float

    def covariance(self) -> np.ndarray:
        """4x4 symmetric covariance over (x, p_x, q, p_q)."""
        return np.array([
            [self.xx, 0.5 * self.xpx, self.xq, self.xpq],
            [0.5 * self.xpx, self.pxpx, self.qpx, self.pxpq],
            [self.xq, self.qpx, self.qq, 0.5 * self.qpq],
            [self.xpq, self.pxpq, 0.5 * self.qpq, self.pqpq],
        ])

    @classmethod
    def from_covariance(cls, cov: np.ndarray) -> "InitialConditions10":
        cov = np.asarray(cov, dtype=float)
        return cls(
            xx=cov[0, 0], qq=cov[2, 2], xq=cov[0, 2],
            pxpx=cov[1, 1], pqpq=cov[3, 3], pxpq=cov[1, 3],
            xpx=2.0 * cov[0, 1], qpq=2.0 * cov[2, 3],
            xpq=cov[0, 3], qpx=cov[1, 2],
        )

    def validate(self) -> None:
        from .exact import symplectic_eigenvalues

        if float(np.min(symplectic_eigenvalues(self.covariance()))) < 0.5 - 1e-9:
            raise UnphysicalState("initial conditions violate the uncertainty bound")


@dataclass(frozen=True)
class ModeAmplitudeCorrelators:
    """Ten symmetrized correlators of the normal-mode amplitudes at t0.

    a0b0-style entries are full anticommutators <{A_0, B_0}> etc.
    """

    a0a0: float
    b0b0: float
    a1a1: float
    b1b1: float
    a0b0: float
    a1b1: float
    a0a1: float
    b0b1: float
    a0b1: float
    b0a1: float

    def as_tuple(self) -> tuple[float, ...]:
        return tuple(getattr(self, f.name) for f in fields(self))


def amplitudes_from_ics(basis: NormalModeBasis, ic: InitialConditions10) -> ModeAmplitudeCorrelators:
    """Invert the t0 relations for the mode-amplitude correlators."""
    c2, s2 = basis.cos2t, basis.sin2t
    w0, w1 = basis.omega_bar0, basis.omega_bar1
    a0a0 = 0.5 * (ic.xx + ic.qq + c2 * (ic.xx - ic.qq) - 2.0 * s2 * ic.xq)
    a1a1 = 0.5 * (ic.xx + ic.qq - c2 * (ic.xx - ic.qq) + 2.0 * s2 * ic.xq)
    a0a1 = (ic.xx - ic.qq) * s2 + 2.0 * c2 * ic.xq
    b0b0 = (ic.pxpx + ic.pqpq + c2 * (ic.pxpx - ic.pqpq) - 2.0 * s2 * ic.pxpq) / (2.0 * w0**2)
    b1b1 = (ic.pxpx + ic.pqpq - c2 * (ic.pxpx - ic.pqpq) + 2.0 * s2 * ic.pxpq) / (2.0 * w1**2)
    b0b1 = ((ic.pxpx - ic.pqpq) * s2 + 2.0 * c2 * ic.pxpq) / (w0 * w1)
    a0b0 = (
        ic.xpx + ic.qpq + c2 * (ic.xpx - ic.qpq) - 2.0 * s2 * (ic.qpx + ic.xpq)
    ) / (2.0 * w0)
    a1b1 = (
        ic.xpx + ic.qpq - c2 * (ic.xpx - ic.qpq) + 2.0 * s2 * (ic.qpx + ic.xpq)
    ) / (2.0 * w1)
    a0b1 = (
        s2 * (ic.xpx - ic.qpq) + 2.0 * (ic.xpq - ic.qpx) + 2.0 * c2 * (ic.xpq + ic.qpx)
    ) / (2.0 * w1)
    b0a1 = (
        s2 * (ic.xpx - ic.qpq) - 2.0 * (ic.xpq - ic.qpx) + 2.0 * c2 * (ic.xpq + ic.qpx)
    ) / (2.0 * w0)
    return ModeAmplitudeCorrelators(
        a0a0=a0a0, b0b0=b0b0, a1a1=a1a1, b1b1=b1b1, a0b0=a0b0,
        a1b1=a1b1, a0a1=a0a1, b0b1=b0b1, a0b1=a0b1, b0a1=b0a1,
    )


def ics_from_amplitudes(basis: NormalModeBasis, amps: ModeAmplitudeCorrelators) -> InitialConditions10:
    """Forward map from amplitude correlators to the t0 expectation values."""
    c2, s2 = basis.cos2t, basis.sin2t
    cc = 0.5 * (1.0 + c2)  # cos^2 theta
    ss = 0.5 * (1.0 - c2)  # sin^2 theta
    w0, w1 = basis.omega_bar0, basis.omega_bar1
    m = amps
    xx = cc * m.a0a0 + ss * m.a1a1 + 0.5 * s2 * m.a0a1
    qq = ss * m.a0a0 + cc * m.a1a1 - 0.5 * s2 * m.a0a1
    xq = 0.5 * (s2 * (m.a1a1 - m.a0a0) + c2 * m.a0a1)
    pxpx = cc * w0**2 * m.b0b0 + ss * w1**2 * m.b1b1 + 0.5 * s2 * w0 * w1 * m.b0b1
    pqpq = ss * w0**2 * m.b0b0 + cc * w1**2 * m.b1b1 - 0.5 * s2 * w0 * w1 * m.b0b1
    pxpq = 0.5 * (s2 * (w1**2 * m.b1b1 - w0**2 * m.b0b0) + c2 * w0 * w1 * m.b0b1)
    xpx = cc * w0 * m.a0b0 + ss * w1 * m.a1b1 + 0.5 * s2 * (w1 * m.a0b1 + w0 * m.b0a1)
    qpq = ss * w0 * m.a0b0 + cc * w1 * m.a1b1 - 0.5 * s2 * (w1 * m.a0b1 + w0 * m.b0a1)
    xpq = 0.5 * (
        0.5 * s2 * (w1 * m.a1b1 - w0 * m.a0b0) + cc * w1 * m.a0b1 - ss * w0 * m.b0a1
    )
    qpx = 0.5 * (
        0.5 * s2 * (w1 * m.a1b1 - w0 * m.a0b0) + cc * w0 * m.b0a1 - ss * w1 * m.a0b1
    )
    return InitialConditions10(
        xx=xx, qq=qq, xq=xq, pxpx=pxpx, pqpq=pqpq, pxpq=pxpq,
        xpx=xpx, qpq=qpq, xpq=xpq, qpx=qpx,
    )


def pure_thermal_ic10(omega0: float, omega1: float, beta: float) -> InitialConditions10:
    """System pure, environment thermal at beta, no cross correlations."""
    cf = gaussian.ThermalSpec(beta=beta, omega=omega1).coth_factor()
    return InitialConditions10(
        xx=1.0 / (2.0 * omega0), pxpx=0.5 * omega0, xpx=0.0,
        qq=cf / (2.0 * omega1), pqpq=0.5 * omega1 * cf, qpq=0.0,
        xq=0.0, pxpq=0.0, xpq=0.0, qpx=0.0,
    )


def time_translation_invariant_ic(omega0: float, omega1: float, lam: float) -> InitialConditions10:
    """Entangled pure-system state whose propagator has no average-time dependence.

    The implied environment temperature satisfies coth(beta omega1/2) =
    omega1/omega0; the only nonzero cross moment is <p_x p_q> = lam/(2 omega0).
    """
    if abs(lam) > omega0 * omega1:
        raise InvertedOscillator(f"lambda = {lam} > omega0*omega1 = {omega0 * omega1}")
    return InitialConditions10(
        xx=1.0 / (2.0 * omega0), pxpx=0.5 * omega0, xpx=0.0,
        qq=1.0 / (2.0 * omega0), pqpq=omega1**2 / (2.0 * omega0), qpq=0.0,
        xq=0.0, pxpq=lam / (2.0 * omega0), xpq=0.0, qpx=0.0,
    )


class Propagator:
    """Two-time correlator as a finite sum of coef * trig(w_a t) * trig(w_b t').

    Derivatives are exact term-by-term differentiations of the closed form,
    never finite differences. Evaluators accept scalars or numpy arrays.
    """

    __slots__ = ("coefs", "wa", "wb", "ca", "cb")

    def __init__(self, terms):
        # term: (coef, w_t, t_is_cos, w_tp, tp_is_cos)
        terms = [t for t in terms if t[0] != 0.0]
        self.coefs = np.array([t[0] for t in terms])
        self.wa = np.array([t[1] for t in terms])
        self.ca = np.array([t[2] for t in terms], dtype=bool)
        self.wb = np.array([t[3] for t in terms])
        self.cb = np.array([t[4] for t in terms], dtype=bool)

    @staticmethod
    def _trig(w, is_cos, t, deriv):
        """d^deriv/dt^deriv of cos(w t) or sin(w t)."""
        phase = np.outer(np.atleast_1d(t), w)
        if deriv == 0:
            return np.where(is_cos, np.cos(phase), np.sin(phase))
        return np.where(is_cos, -w * np.sin(phase), w * np.cos(phase))

    def _eval(self, t, tp, da, db):
        fa = self._trig(self.wa, self.ca, t, da)
        fb = self._trig(self.wb, self.cb, tp, db)
        out = (self.coefs * fa * fb).sum(axis=1)
        return float(out[0]) if np.isscalar(t) and np.isscalar(tp) else out

    def value(self, t, tp):
        return self._eval(t, tp, 0, 0)

    def dt(self, t, tp):
        return self._eval(t, tp, 1, 0)

    def dtp(self, t, tp):
        return self._eval(t, tp, 0, 1)

    def dt_dtp(self, t, tp):
        return self._eval(t, tp, 1, 1)


def _mode_group(factor, w, aa, bb, ab):
    """Diagonal-mode terms: aa cos cos + bb sin sin + (ab/2)(cos sin + sin cos)."""
    return [
        (factor * aa, w, True, w, True),
        (factor * bb, w, False, w, False),
        (factor * 0.5 * ab, w, True, w, False),
        (factor * 0.5 * ab, w, False, w, True),
    ]


def _cross_group(factor, w0, w1, m: ModeAmplitudeCorrelators):
    """Symmetrized cross-mode terms of F_x / F_q."""
    return [
        (factor * m.a0a1, w0, True, w1, True),
        (factor * m.a0a1, w1, True, w0, True),
        (factor * m.b0b1, w0, False, w1, False),
        (factor * m.b0b1, w1, False, w0, False),
        (factor * m.a0b1, w0, True, w1, False),
        (factor * m.a0b1, w1, False, w0, True),
        (factor * m.b0a1, w0, False, w1, True),
        (factor * m.b0a1, w1, True, w0, False),
    ]


def propagator_x(basis: NormalModeBasis, m: ModeAmplitudeCorrelators) -> Propagator:
    """F_x(t; t') = <{x(t), x(t')}>/2 in closed form."""
    cc = 0.5 * (1.0 + basis.cos2t)
    ss = 0.5 * (1.0 - basis.cos2t)
    w0, w1 = basis.omega_bar0, basis.omega_bar1
    terms = _mode_group(cc, w0, m.a0a0, m.b0b0, m.a0b0)
    terms += _mode_group(ss, w1, m.a1a1, m.b1b1, m.a1b1)
    terms += _cross_group(0.25 * basis.sin2t, w0, w1, m)
    return Propagator(terms)


def propagator_q(basis: NormalModeBasis, m: ModeAmplitudeCorrelators) -> Propagator:
    """F_q(t; t') = <{q(t), q(t')}>/2 in closed form."""
    cc = 0.5 * (1.0 + basis.cos2t)
    ss = 0.5 * (1.0 - basis.cos2t)
    w0, w1 = basis.omega_bar0, basis.omega_bar1
    terms = _mode_group(ss, w0, m.a0a0, m.b0b0, m.a0b0)
    terms += _mode_group(cc, w1, m.a1a1, m.b1b1, m.a1b1)
    terms += _cross_group(-0.25 * basis.sin2t, w0, w1, m)
    return Propagator(terms)


def propagator_xq(basis: NormalModeBasis, m: ModeAmplitudeCorrelators) -> Propagator:
    """F_xq(t; t') = <{x(t'), q(t)}>/2; note F_qx(t; t') = F_xq(t'; t)."""
    cc = 0.5 * (1.0 + basis.cos2t)
    ss = 0.5 * (1.0 - basis.cos2t)
    w0, w1 = basis.omega_bar0, basis.omega_bar1
    st = 0.5 * basis.sin2t
    terms = _mode_group(st, w1, m.a1a1, m.b1b1, m.a1b1)
    terms += _mode_group(-st, w0, m.a0a0, m.b0b0, m.a0b0)
    # first time argument belongs to q, second to x
    terms += [
        (0.5 * cc * m.a0a1, w1, True, w0, True),
        (0.5 * cc * m.b0b1, w1, False, w0, False),
        (0.5 * cc * m.a0b1, w1, False, w0, True),
        (0.5 * cc * m.b0a1, w1, True, w0, False),
        (-0.5 * ss * m.a0a1, w0, True, w1, True),
        (-0.5 * ss * m.b0b1, w0, False, w1, False),
        (-0.5 * ss * m.a0b1, w0, True, w1, False),
        (-0.5 * ss * m.b0a1, w0, False, w1, True),
    ]
    return Propagator(terms)


def equal_time_triple(p: Propagator, t) -> CorrelatorTriple:
    """(xx, pp, xp) of the mode a diagonal propagator describes, at time t."""
    return CorrelatorTriple(xx=p.value(t, t), pp=p.dt_dtp(t, t), xp=p.dt(t, t))


def delta_from_propagator(p: Propagator, t) -> PhaseSpaceArea:
    """Delta^2 = 4 [F d_t d_t' F - (d_t F)^2] at equal times, from exact derivatives."""
    return gaussian.phase_space_area(equal_time_triple(p, t))


def delta_series(p: Propagator, times: np.ndarray) -> np.ndarray:
    """Raw Delta^2 over a time grid (no clamping; callers apply policy)."""
    f = p.value(times, times)
    dli = p.dt(times, times)
    dd = p.dt_dtp(times, times)
    return 4.0 * (f * dd - dli**2)


def propagator_x_avg_time(
    basis: NormalModeBasis, m: ModeAmplitudeCorrelators, tau, dt
):
    """F_x re-parameterized by average time tau and difference dt.

    Independent coding of the same function as propagator_x, used to expose
    which initial data multiply the average-time oscillations.
    """
    cc = 0.5 * (1.0 + basis.cos2t)
    ss = 0.5 * (1.0 - basis.cos2t)
    w0, w1 = basis.omega_bar0, basis.omega_bar1
    wbar = 0.5 * (w0 + w1)
    dwbar = w0 - w1
    tau = np.asarray(tau, dtype=float)
    dt = np.asarray(dt, dtype=float)
    out = 0.5 * cc * (
        np.cos(w0 * dt) * (m.a0a0 + m.b0b0)
        + np.cos(2.0 * w0 * tau) * (m.a0a0 - m.b0b0)
        + np.sin(2.0 * w0 * tau) * m.a0b0
    )
    out += 0.5 * ss * (
        np.cos(w1 * dt) * (m.a1a1 + m.b1b1)
        + np.cos(2.0 * w1 * tau) * (m.a1a1 - m.b1b1)
        + np.sin(2.0 * w1 * tau) * m.a1b1
    )
    out += 0.25 * basis.sin2t * (
        np.cos(dwbar * tau) * np.cos(wbar * dt) * (m.a0a1 + m.b0b1)
        + np.cos(2.0 * wbar * tau) * np.cos(0.5 * dwbar * dt) * (m.a0a1 - m.b0b1)
        + np.sin(dwbar * tau) * np.cos(wbar * dt) * (m.b0a1 - m.a0b1)
        + np.sin(2.0 * wbar * tau) * np.cos(0.5 * dwbar * dt) * (m.b0a1 + m.a0b1)
    )
    return float(out) if out.ndim == 0 else out
