"""Decoherence of a harmonic oscillator coupled to N environment oscillators.

Exact Gaussian correlator evolution, the closed-form N = 1 solution, the
perturbative time-local master equation, and a full two-mode density-matrix
oracle, with a scenario runner and CLI on top.
"""

from . import analytic, density_matrix, errors, exact, gaussian, master, ode, output, scenarios
from .gaussian import (
    CorrelatorTriple,
    GaussianCoeffs1D,
    PhaseSpaceArea,
    ThermalSpec,
    entropy_from_delta,
    particle_number,
    phase_space_area,
)
from .exact import CorrelatorState, ModelParams
from .scenarios import Scenario, list_presets, preset, run_scenario, thermal_baseline

__version__ = "0.1.0"

__all__ = [
    "analytic",
    "density_matrix",
    "errors",
    "exact",
    "gaussian",
    "master",
    "ode",
    "output",
    "scenarios",
    "CorrelatorTriple",
    "GaussianCoeffs1D",
    "PhaseSpaceArea",
    "ThermalSpec",
    "CorrelatorState",
    "ModelParams",
    "Scenario",
    "entropy_from_delta",
    "particle_number",
    "phase_space_area",
    "preset",
    "list_presets",
    "run_scenario",
    "thermal_baseline",
    "__version__",
]
