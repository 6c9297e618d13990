"""Single-mode Gaussian algebra: areas, entropies, coefficient maps."""

import math

import numpy as np
import pytest

from decosim import gaussian
from decosim.errors import DegenerateCoeffs, UnphysicalState
from decosim.gaussian import (
    CorrelatorTriple,
    GaussianCoeffs1D,
    PhaseSpaceArea,
    ThermalSpec,
    coeffs_to_correlators,
    correlation_entropy,
    correlators_to_coeffs,
    entropy_from_delta,
    free_thermal_statistical_propagator,
    particle_number,
    phase_space_area,
    phase_space_area_from_delta_sq,
    thermal_density_matrix,
    thermal_triple,
)

COTH_1 = 1.3130352854993315  # coth(1)


def random_physical_triples(n, seed=0):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        xx = rng.uniform(0.05, 5.0)
        pp = rng.uniform(0.05, 5.0)
        # keep xx*pp - xp^2 >= 1/4
        slack = xx * pp - 0.25
        if slack <= 0:
            continue
        xp = rng.uniform(-1.0, 1.0) * math.sqrt(slack)
        out.append(CorrelatorTriple(xx=xx, pp=pp, xp=xp))
    return out


class TestPhaseSpaceArea:
    def test_pure_ground_state(self):
        omega0 = 1.7
        c = CorrelatorTriple(xx=1 / (2 * omega0), pp=omega0 / 2, xp=0.0)
        assert phase_space_area(c).delta == pytest.approx(1.0, abs=1e-15)

    def test_thermal_state_gives_coth(self):
        for beta, omega in ((2.0, 1.0), (0.4, 2.5), (7.0, 0.3)):
            cf = 1 / math.tanh(beta * omega / 2)
            c = CorrelatorTriple(xx=cf / (2 * omega), pp=omega * cf / 2, xp=0.0)
            assert phase_space_area(c).delta == pytest.approx(cf, rel=1e-14)

    def test_generic_triple(self):
        # 2*sqrt(0.7*0.9 - 0.09) = 2*sqrt(0.54)
        c = CorrelatorTriple(xx=0.7, pp=0.9, xp=0.3)
        assert phase_space_area(c).delta == pytest.approx(1.469693845669907, rel=1e-14)

    def test_unphysical_raises(self):
        with pytest.raises(UnphysicalState):
            phase_space_area(CorrelatorTriple(xx=0.3, pp=0.3, xp=0.2))

    def test_clamp_band(self):
        psa = phase_space_area_from_delta_sq(1.0 - 5e-7)
        assert psa.delta == 1.0 and psa.clamped
        with pytest.raises(UnphysicalState):
            phase_space_area_from_delta_sq(1.0 - 5e-6)

    def test_symplectic_rescaling_invariance(self):
        # power-of-two rescalings are exact in floating point
        base = CorrelatorTriple(xx=0.7, pp=0.9, xp=0.3)
        d0 = phase_space_area(base).delta
        for s in (2.0, 0.5, 8.0):
            c = CorrelatorTriple(xx=s**2 * base.xx, pp=base.pp / s**2, xp=base.xp)
            assert phase_space_area(c).delta == d0
        for s in (1.3, 0.77):
            c = CorrelatorTriple(xx=s**2 * base.xx, pp=base.pp / s**2, xp=base.xp)
            assert phase_space_area(c).delta == pytest.approx(d0, rel=1e-14)


class TestEntropy:
    def test_pure_state_zero(self):
        assert entropy_from_delta(PhaseSpaceArea(delta=1.0)) == 0.0
        assert entropy_from_delta(1.0 + 5e-13) == 0.0

    def test_thermal_value(self):
        # S(coth(1)), the thermal entropy at beta*omega = 2
        s = entropy_from_delta(COTH_1)
        assert s == pytest.approx(0.4584487433681905, rel=1e-13)
        assert s == pytest.approx(0.458, abs=1e-3)

    def test_delta_three(self):
        assert entropy_from_delta(3.0) == pytest.approx(1.3862943611198906, rel=1e-14)

    def test_bose_gas_form(self):
        rng = np.random.default_rng(42)
        for delta in rng.uniform(1.0 + 1e-6, 50.0, 100):
            n = particle_number(delta)
            bose = (n + 1) * math.log(n + 1) - n * math.log(n)
            assert entropy_from_delta(float(delta)) == pytest.approx(bose, rel=1e-12)

    def test_monotone_in_delta(self):
        grid = np.linspace(1.0, 40.0, 1000)
        vals = [entropy_from_delta(float(d)) for d in grid]
        assert all(b > a for a, b in zip(vals, vals[1:]))


class TestParticleNumber:
    def test_pure(self):
        assert particle_number(1.0) == 0.0

    def test_planck_distribution(self):
        for beta_omega in (0.5, 2.0, 6.0):
            delta = 1 / math.tanh(beta_omega / 2)
            assert particle_number(delta) == pytest.approx(
                1 / (math.exp(beta_omega) - 1), rel=1e-12
            )

    def test_beta_omega_two(self):
        assert particle_number(COTH_1) == pytest.approx(0.15651764274966568, rel=1e-13)


class TestCoefficientMaps:
    def test_ground_state_coeffs(self):
        omega0 = 1.3
        g = GaussianCoeffs1D(a=omega0 / 2, c=0.0, log_norm=0.0)
        c = coeffs_to_correlators(g)
        assert c.xx == pytest.approx(1 / (2 * omega0), rel=1e-14)
        assert c.pp == pytest.approx(omega0 / 2, rel=1e-14)
        assert c.xp == 0.0

    def test_worked_example(self):
        g = GaussianCoeffs1D(a=0.5 + 0.2j, c=0.1, log_norm=0.0)
        c = coeffs_to_correlators(g)
        assert c.xx == pytest.approx(0.625, rel=1e-14)
        assert c.xp == pytest.approx(-0.25, rel=1e-14)
        assert c.pp == pytest.approx(0.7, rel=1e-14)

    def test_degenerate_raises(self):
        with pytest.raises(DegenerateCoeffs):
            coeffs_to_correlators(GaussianCoeffs1D(a=0.3 + 0j, c=0.4, log_norm=0.0))

    def test_thermal_inversion(self):
        # beta*omega = 2, omega = 1: xx = coth(1)/2
        c = thermal_triple(ThermalSpec(beta=2.0, omega=1.0))
        g = correlators_to_coeffs(c)
        assert c.xx == pytest.approx(0.6565176427496657, rel=1e-14)
        assert g.a_r == pytest.approx(0.5186573603637741, rel=1e-13)
        assert g.c == pytest.approx(0.13786028238589165, rel=1e-13)
        assert g.c < g.a_r

    def test_round_trip_identity(self):
        for c in random_physical_triples(1000):
            g = correlators_to_coeffs(c)
            back = coeffs_to_correlators(g)
            assert back.xx == pytest.approx(c.xx, rel=1e-12)
            assert back.pp == pytest.approx(c.pp, rel=1e-12)
            assert back.xp == pytest.approx(c.xp, rel=1e-12, abs=1e-12)


class TestThermalReference:
    def test_propagator_equal_times(self):
        s = ThermalSpec(beta=0.8, omega=1.7)
        assert free_thermal_statistical_propagator(s, 3.0, 3.0) == pytest.approx(
            s.coth_factor() / (2 * s.omega), rel=1e-14
        )

    def test_zero_temperature(self):
        s = ThermalSpec.zero_temperature(omega=2.0)
        assert s.coth_factor() == 1.0
        assert free_thermal_statistical_propagator(s, 5.0, 5.0) == pytest.approx(0.25)

    def test_large_beta_no_overflow(self):
        # beta*omega = 4000 must not overflow and is exactly the T=0 value
        assert ThermalSpec(beta=2000.0, omega=2.0).coth_factor() == 1.0

    def test_half_period_value(self):
        s = ThermalSpec(beta=2.0, omega=1.0)
        f = free_thermal_statistical_propagator(s, math.pi, 0.0)
        assert f == pytest.approx(-0.6565176427496657, rel=1e-13)

    def test_thermal_density_matrix_t0(self):
        g = thermal_density_matrix(ThermalSpec.zero_temperature(omega=1.4))
        assert g.a == pytest.approx(0.7)
        assert g.c == pytest.approx(0.0, abs=1e-15)

    def test_thermal_density_matrix_high_t(self):
        s = ThermalSpec(beta=0.2, omega=1.0)
        g = thermal_density_matrix(s)
        c = coeffs_to_correlators(g)
        delta = phase_space_area(c).delta
        assert delta == pytest.approx(10.03331113225399, rel=1e-12)
        # high-temperature limit 2/(beta*omega) = 10 as a sanity bound
        assert abs(delta - 10.0) < 0.05
        assert c.xx == pytest.approx(s.coth_factor() / (2 * s.omega), rel=1e-13)


class TestCorrelationEntropy:
    def test_arithmetic(self):
        assert correlation_entropy(0.458, 0.3, 0.3) == pytest.approx(-0.142)

    def test_uncoupled_zero(self):
        assert correlation_entropy(0.7, 0.4, 0.3) == pytest.approx(0.0, abs=1e-15)


class TestValidation:
    def test_triple_validate(self):
        CorrelatorTriple(xx=1.0, pp=1.0, xp=0.0).validate()
        with pytest.raises(UnphysicalState):
            CorrelatorTriple(xx=-1.0, pp=1.0, xp=0.0).validate()

    def test_thermal_spec_validate(self):
        with pytest.raises(ValueError):
            ThermalSpec(beta=-1.0, omega=1.0)
        with pytest.raises(ValueError):
            ThermalSpec(beta=1.0, omega=0.0)

    def test_coeffs_validate(self):
        with pytest.raises(DegenerateCoeffs):
            GaussianCoeffs1D(a=0.2 + 0j, c=0.3, log_norm=0.0).validate()
