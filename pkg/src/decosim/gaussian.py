"""Single-mode Gaussian state algebra.

Relates the three symmetrized second moments of one oscillator mode to the
density-matrix exponent coefficients, the phase-space area, the von Neumann
entropy, the statistical particle number, and thermal reference states.
Natural units throughout: hbar = k_B = 1, masses rescaled away.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateCoeffs, UnphysicalState

# Clamp policy for numerically pure states: delta^2 in [1 - DELTA_SQ_BAND, 1)
# is treated as 1 (flagged); anything below is a hard error.
DELTA_SQ_BAND = 1e-6
_PURE_EPS = 1e-12


def coth(x: float) -> float:
    """Hyperbolic cotangent, safe for large arguments (1/tanh never overflows)."""
    return 1.0 / math.tanh(x)


@dataclass(frozen=True)
class CorrelatorTriple:
    """Equal-time second moments of one mode: <x^2>, <p^2>, <{x,p}>/2."""

    xx: float
    pp: float
    xp: float

    def uncertainty_product(self) -> float:
        return self.xx * self.pp - self.xp**2

    def validate(self, tol: float = 1e-9) -> None:
        if not (self.xx > 0.0 and self.pp > 0.0):
            raise UnphysicalState(f"non-positive variances: xx={self.xx}, pp={self.pp}")
        if self.uncertainty_product() < 0.25 - tol:
            raise UnphysicalState(
                f"uncertainty relation violated: xx*pp - xp^2 = {self.uncertainty_product()}"
            )


@dataclass(frozen=True)
class GaussianCoeffs1D:
    """Exponent coefficients of rho(x, y) = N exp(-a x^2 - a* y^2 + 2 c x y).

    Hermiticity fixes the y^2 coefficient to a*; c is real. log_norm is ln N.
    """

    a: complex
    c: float
    log_norm: float

    @property
    def a_r(self) -> float:
        return self.a.real

    @property
    def a_i(self) -> float:
        return self.a.imag

    def validate(self) -> None:
        if not self.c < self.a_r:
            raise DegenerateCoeffs(f"normalizability requires c < Re(a): a={self.a}, c={self.c}")


@dataclass(frozen=True)
class PhaseSpaceArea:
    """Phase-space area of a Gaussian state in units of hbar (Delta, not Delta^2).

    Delta = 1 for a pure state. `clamped` marks values rescued from the
    tolerated numerical band just below 1.
    """

    delta: float
    clamped: bool = False


@dataclass(frozen=True)
class ThermalSpec:
    """Inverse temperature and frequency of one thermal mode.

    beta = math.inf encodes T = 0 exactly (coth factor 1, no overflow).
    """

    beta: float
    omega: float

    def __post_init__(self) -> None:
        if not self.beta > 0.0:
            raise ValueError(f"beta must be positive (or inf for T=0), got {self.beta}")
        if not self.omega > 0.0:
            raise ValueError(f"omega must be positive, got {self.omega}")

    @classmethod
    def zero_temperature(cls, omega: float) -> "ThermalSpec":
        return cls(beta=math.inf, omega=omega)

    def coth_factor(self) -> float:
        """coth(beta omega / 2); exactly 1 at T = 0."""
        if math.isinf(self.beta):
            return 1.0
        return coth(0.5 * self.beta * self.omega)


def phase_space_area_from_delta_sq(delta_sq: float) -> PhaseSpaceArea:
    """Apply the clamp policy to a raw Delta^2 value."""
    if delta_sq < 1.0 - DELTA_SQ_BAND:
        raise UnphysicalState(f"Delta^2 = {delta_sq} below the physical bound 1")
    if delta_sq < 1.0:
        return PhaseSpaceArea(delta=1.0, clamped=True)
    return PhaseSpaceArea(delta=math.sqrt(delta_sq))


def phase_space_area(c: CorrelatorTriple) -> PhaseSpaceArea:
    """Delta = 2 sqrt(<x^2><p^2> - <{x,p}/2>^2)."""
    return phase_space_area_from_delta_sq(4.0 * c.uncertainty_product())


def entropy_from_delta(d: PhaseSpaceArea | float) -> float:
    """Gaussian von Neumann entropy in nats.

    S = (Delta+1)/2 ln((Delta+1)/2) - (Delta-1)/2 ln((Delta-1)/2), with the
    pure-state limit S(1) = 0 taken exactly for Delta within 1e-12 of 1.
    """
    delta = d.delta if isinstance(d, PhaseSpaceArea) else float(d)
    if delta < 1.0 - DELTA_SQ_BAND:
        raise UnphysicalState(f"Delta = {delta} below 1")
    if delta < 1.0 + _PURE_EPS:
        return 0.0
    up = 0.5 * (delta + 1.0)
    dn = 0.5 * (delta - 1.0)
    return up * math.log(up) - dn * math.log(dn)


def particle_number(d: PhaseSpaceArea | float) -> float:
    """Statistical particle number n = (Delta - 1)/2."""
    delta = d.delta if isinstance(d, PhaseSpaceArea) else float(d)
    return 0.5 * (delta - 1.0)


def coeffs_to_correlators(g: GaussianCoeffs1D) -> CorrelatorTriple:
    """Second moments from exponent coefficients."""
    den = g.a_r - g.c
    if den <= 0.0:
        raise DegenerateCoeffs(f"a_R - c = {den} <= 0")
    xx = 1.0 / (4.0 * den)
    xp = -g.a_i / (2.0 * den)
    pp = (abs(g.a) ** 2 - g.c**2) / den
    return CorrelatorTriple(xx=xx, pp=pp, xp=xp)


def correlators_to_coeffs(c: CorrelatorTriple) -> GaussianCoeffs1D:
    """Exponent coefficients from second moments (inverse of coeffs_to_correlators)."""
    psa = phase_space_area(c)
    delta_sq = psa.delta**2
    a_i = -c.xp / (2.0 * c.xx)
    a_r = (delta_sq + 1.0) / (8.0 * c.xx)
    cc = (delta_sq - 1.0) / (8.0 * c.xx)
    log_norm = 0.5 * math.log(2.0 * (a_r - cc) / math.pi)
    return GaussianCoeffs1D(a=complex(a_r, a_i), c=cc, log_norm=log_norm)


def free_thermal_statistical_propagator(s: ThermalSpec, t: float, t_prime: float) -> float:
    """Two-time symmetrized correlator of a free thermal mode.

    F(t; t') = cos(omega (t - t')) / (2 omega) * coth(beta omega / 2).
    """
    return math.cos(s.omega * (t - t_prime)) / (2.0 * s.omega) * s.coth_factor()


def thermal_triple(s: ThermalSpec) -> CorrelatorTriple:
    """Equal-time moments of a free thermal mode."""
    cf = s.coth_factor()
    return CorrelatorTriple(xx=cf / (2.0 * s.omega), pp=0.5 * s.omega * cf, xp=0.0)


def thermal_density_matrix(s: ThermalSpec) -> GaussianCoeffs1D:
    """Exponent coefficients of the free thermal state at (beta, omega)."""
    return correlators_to_coeffs(thermal_triple(s))


def correlation_entropy(s_total: float, s_sys: float, s_env: float) -> float:
    """S_SE = S_total - S_S - S_E; negative when subsystem entropies grow."""
    return s_total - s_sys - s_env
