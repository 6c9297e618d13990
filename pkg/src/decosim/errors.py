"""Exception types shared across the simulator."""


class DecosimError(Exception):
    """Base class for all simulator errors."""


class UnphysicalState(DecosimError):
    """A Gaussian state violates the uncertainty relation beyond tolerance."""


class DegenerateCoeffs(DecosimError):
    """Density-matrix exponent is no longer normalizable (a_R - c <= 0)."""


class DegenerateEnvironment(DecosimError):
    """Environment block of a two-mode exponent cannot be integrated out."""


class NormalizabilityLoss(DecosimError):
    """Two-mode density-matrix coefficients left the normalizable region."""


class InvertedOscillator(DecosimError):
    """Coupling exceeds the stability bound; a normal mode would be inverted."""


class ResonantDivergence(DecosimError):
    """Closed-form master coefficients are singular at omega_n ~ omega0."""


class DimensionMismatch(DecosimError):
    """State shape does not match the model dimension."""


class IntegratorFailure(DecosimError):
    """The ODE integrator could not complete the requested span."""


class StepUnderflow(IntegratorFailure):
    """Step-size controller drove h below the resolvable minimum."""


class InsufficientSampling(DecosimError):
    """Sampled series is too coarse for the requested estimate."""


class ScenarioError(DecosimError):
    """Scenario definition violates a consistency rule."""


class UnknownPreset(ScenarioError):
    """Requested preset name is not defined."""
