"""Full two-mode Gaussian density matrix evolved under the von Neumann equation.

Independent oracle for the N = 1 case: the ten real exponent coefficients are
integrated directly, the environment is traced out in closed form, and the
reduced entropy is compared against the covariance route. Shares no state
representation with the exact-evolution module on purpose.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import gaussian
from .errors import DegenerateEnvironment, NormalizabilityLoss, UnphysicalState
from .gaussian import GaussianCoeffs1D
from .ode import IntegratorOpts, integrate


@dataclass(frozen=True)
class GaussianCoeffs2D:
    """Exponent coefficients of the two-mode Gaussian density matrix.

    rho(x, q; y, r) = N exp(-a x^2 - d1 x q - a1 q^2
                            - a* y^2 - d1* y r - a1* r^2
                            + 2 c x y + e1 x r + e1* q y + 2 c1 q r)

    c and c1 are real by hermiticity; ten real degrees of freedom plus ln N.
    """

    a: complex
    a1: complex
    c: float
    c1: float
    d1: complex
    e1: complex
    log_norm: float

    def validate(self) -> None:
        p_env = self.a1.real - self.c1
        if p_env <= 0.0:
            raise NormalizabilityLoss(f"a1_R - c1 = {p_env} <= 0")
        disc = 4.0 * (self.a.real - self.c) * p_env - (self.d1.real - self.e1.real) ** 2
        if disc <= 0.0:
            raise NormalizabilityLoss(f"normalization discriminant {disc} <= 0")

    def as_vector(self) -> np.ndarray:
        return np.array([
            self.a.real, self.a.imag, self.c,
            self.a1.real, self.a1.imag, self.c1,
            self.d1.real, self.d1.imag, self.e1.real, self.e1.imag,
            self.log_norm,
        ])

    @classmethod
    def from_vector(cls, y: np.ndarray) -> "GaussianCoeffs2D":
        return cls(
            a=complex(y[0], y[1]), c=float(y[2]),
            a1=complex(y[3], y[4]), c1=float(y[5]),
            d1=complex(y[6], y[7]), e1=complex(y[8], y[9]),
            log_norm=float(y[10]),
        )


def log_norm_closed_form(g: GaussianCoeffs2D) -> float:
    """ln N from the trace condition, independent of the evolved ln N."""
    disc = (
        4.0 * (g.a.real - g.c) * (g.a1.real - g.c1)
        - (g.d1.real - g.e1.real) ** 2
    )
    if disc <= 0.0:
        raise NormalizabilityLoss(f"normalization discriminant {disc} <= 0")
    return 0.5 * math.log(disc) - math.log(math.pi)


def full_vn_rhs(omega0: float, omega1: float, lam: float, y: np.ndarray) -> np.ndarray:
    """Right-hand side of the ten coupled coefficient equations plus d(ln N)/dt.

    Derived by inserting the exponent ansatz into the von Neumann equation and
    matching monomials; d(ln N)/dt = 2(a_I + a1_I) keeps the trace at one,
    which pins every sign (the a1_R equation needs +e1_R e1_I).
    """
    ar, ai, c, a1r, a1i, c1, d1r, d1i, e1r, e1i, _ = y
    dar = 4.0 * ai * ar + (d1r * d1i - e1r * e1i)
    dai = (
        0.5 * omega0**2
        + 2.0 * (ai**2 - ar**2 + c**2)
        - 0.5 * (d1r**2 - e1r**2 - d1i**2 + e1i**2)
    )
    dc = 4.0 * ai * c - (d1r * e1i - e1r * d1i)
    da1r = 4.0 * a1i * a1r + (d1r * d1i + e1r * e1i)
    da1i = (
        0.5 * omega1**2
        + 2.0 * (a1i**2 - a1r**2 + c1**2)
        - 0.5 * (d1r**2 - e1r**2 - d1i**2 + e1i**2)
    )
    dc1 = 4.0 * a1i * c1 + (d1r * e1i + e1r * d1i)
    dd1r = 2.0 * ((ar + a1r) * d1i + (ai + a1i) * d1r + (c - c1) * e1i)
    dd1i = lam + 2.0 * (-(ar + a1r) * d1r + (ai + a1i) * d1i + (c + c1) * e1r)
    de1r = 2.0 * ((ar - a1r) * e1i + (ai + a1i) * e1r + (c + c1) * d1i)
    de1i = 2.0 * (-(ar - a1r) * e1r + (ai + a1i) * e1i + (c - c1) * d1r)
    dlogn = 2.0 * (ai + a1i)
    return np.array([dar, dai, dc, da1r, da1i, dc1, dd1r, dd1i, de1r, de1i, dlogn])


def trace_out_environment(g: GaussianCoeffs2D) -> GaussianCoeffs1D:
    """Integrate out the environment coordinate in closed form."""
    p_env = g.a1.real - g.c1
    if p_env <= 0.0:
        raise DegenerateEnvironment(f"a1_R - c1 = {p_env} <= 0")
    de = g.d1 - g.e1
    a_red = g.a - de * de / (8.0 * p_env)
    c_red = g.c + abs(de) ** 2 / (8.0 * p_env)
    log_norm = g.log_norm + 0.5 * math.log(math.pi / (2.0 * p_env))
    return GaussianCoeffs1D(a=a_red, c=c_red, log_norm=log_norm)


def reduced_delta_sq(g: GaussianCoeffs2D) -> float:
    """Raw Delta^2 = (a_R + c)/(a_R - c) of the traced-out system."""
    red = trace_out_environment(g)
    den = red.a_r - red.c
    if den <= 0.0:
        raise UnphysicalState(f"reduced exponent degenerate: a_R - c = {den}")
    return (red.a_r + red.c) / den


def reduced_entropy(g: GaussianCoeffs2D) -> float:
    """Entropy of the reduced system from the traced-out coefficients."""
    psa = gaussian.phase_space_area_from_delta_sq(reduced_delta_sq(g))
    return gaussian.entropy_from_delta(psa)


def _split_blocks(cov: np.ndarray):
    """Reorder (x, p_x, q, p_q) covariance into position/momentum blocks."""
    pos = [0, 2]
    mom = [1, 3]
    s_rr = cov[np.ix_(pos, pos)]
    s_rp = cov[np.ix_(pos, mom)]
    s_pp = cov[np.ix_(mom, mom)]
    return s_rr, s_rp, s_pp


def coeffs2d_from_covariance(cov: np.ndarray) -> GaussianCoeffs2D:
    """Unique exponent parameterization reproducing a physical 4x4 covariance."""
    cov = np.asarray(cov, dtype=float)
    s_rr, s_rp, s_pp = _split_blocks(cov)
    if np.linalg.det(s_rr) <= 0.0 or s_rr[0, 0] <= 0.0:
        raise UnphysicalState("position block not positive definite")
    p = 0.25 * np.linalg.inv(s_rr)
    g_mat = -2.0 * p @ s_rp
    k = s_pp - g_mat.T @ np.linalg.inv(p) @ g_mat
    m_r = 0.5 * (p + k)
    c_r = 0.5 * (k - p)
    coeffs = GaussianCoeffs2D(
        a=complex(m_r[0, 0], g_mat[0, 0]),
        a1=complex(m_r[1, 1], g_mat[1, 1]),
        c=float(c_r[0, 0]),
        c1=float(c_r[1, 1]),
        d1=complex(2.0 * m_r[0, 1], g_mat[0, 1] + g_mat[1, 0]),
        e1=complex(2.0 * c_r[0, 1], g_mat[0, 1] - g_mat[1, 0]),
        log_norm=0.0,
    )
    coeffs = GaussianCoeffs2D(
        a=coeffs.a, a1=coeffs.a1, c=coeffs.c, c1=coeffs.c1,
        d1=coeffs.d1, e1=coeffs.e1, log_norm=log_norm_closed_form(coeffs),
    )
    coeffs.validate()
    return coeffs


def covariance_from_coeffs2d(g: GaussianCoeffs2D) -> np.ndarray:
    """Second moments of the two-mode state by analytic Gaussian integration.

    Moment oracle for coeffs2d_from_covariance; returns the (x, p_x, q, p_q)
    ordered symmetric covariance.
    """
    p = np.array([
        [g.a.real - g.c, 0.5 * (g.d1.real - g.e1.real)],
        [0.5 * (g.d1.real - g.e1.real), g.a1.real - g.c1],
    ])
    k = np.array([
        [g.a.real + g.c, 0.5 * (g.d1.real + g.e1.real)],
        [0.5 * (g.d1.real + g.e1.real), g.a1.real + g.c1],
    ])
    g_mat = np.array([
        [g.a.imag, 0.5 * (g.d1.imag + g.e1.imag)],
        [0.5 * (g.d1.imag - g.e1.imag), g.a1.imag],
    ])
    p_inv = np.linalg.inv(p)
    s_rr = 0.25 * p_inv
    s_rp = -0.5 * p_inv @ g_mat
    s_pp = k + g_mat.T @ p_inv @ g_mat
    cov = np.empty((4, 4))
    pos = [0, 2]
    mom = [1, 3]
    cov[np.ix_(pos, pos)] = s_rr
    cov[np.ix_(pos, mom)] = s_rp
    cov[np.ix_(mom, pos)] = s_rp.T
    cov[np.ix_(mom, mom)] = s_pp
    return cov


def evolve_density_matrix(
    omega0: float,
    omega1: float,
    lam: float,
    g0: GaussianCoeffs2D,
    opts: IntegratorOpts,
) -> list[GaussianCoeffs2D]:
    """Integrate the coefficient system; returns one snapshot per sample time."""
    g0.validate()

    def rhs(_t, y):
        return full_vn_rhs(omega0, omega1, lam, y)

    ys = integrate(rhs, g0.as_vector(), opts)
    return [GaussianCoeffs2D.from_vector(y) for y in ys]
