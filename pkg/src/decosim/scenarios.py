"""Scenario runner: figure presets, entropy trajectories by every applicable
method, decoherence rate, thermal baselines, and breakdown detection.

A scenario bundles the model (explicit frequencies or a spectral recipe), the
environment temperature, the initial-state family, the methods to run, and
the sampling grid. Methods share one time grid so their outputs line up
row-by-row; per-method failures are recorded, never fatal to other methods.
"""

from __future__ import annotations

import math
import time as _time
from dataclasses import dataclass, field, replace

import numpy as np

from . import analytic, density_matrix, exact, gaussian, master
from .errors import InsufficientSampling, ScenarioError, UnknownPreset
from .gaussian import DELTA_SQ_BAND, CorrelatorTriple, ThermalSpec
from .ode import IntegratorOpts

METHOD_EXACT = "exact"
METHOD_ANALYTIC = "analytic-n1"
METHOD_MASTER = "master-correlator"
METHOD_MASTER_COEFF = "master-coeff"
METHOD_DM = "density-matrix-n1"
ALL_METHODS = (METHOD_EXACT, METHOD_ANALYTIC, METHOD_MASTER, METHOD_MASTER_COEFF, METHOD_DM)
_MASTER_METHODS = {METHOD_MASTER, METHOD_MASTER_COEFF}
_N1_METHODS = {METHOD_ANALYTIC, METHOD_DM}

IC_PURE_THERMAL = "pure-thermal"
IC_TIME_TRANSLATION = "time-translation-invariant"

# Column suffix per method, used in CSV headers and result keys.
METHOD_KEYS = {
    METHOD_EXACT: "exact",
    METHOD_ANALYTIC: "analytic",
    METHOD_MASTER: "master",
    METHOD_MASTER_COEFF: "master_coeff",
    METHOD_DM: "dm",
}

# Exact runs get tighter tolerances than the integrator defaults so the
# conserved quantities (energy, det cov) stay within 1e-8 over the longest
# preset horizons.
EXACT_REL_TOL = 1e-11
EXACT_ABS_TOL = 1e-13
MASTER_REL_TOL = 1e-10
MASTER_ABS_TOL = 1e-12


@dataclass(frozen=True)
class SpectrumSpec:
    """Recipe for the environment frequency ratios omega_n / omega0.

    kind "explicit": fixed ratios. kind "uniform": count i.i.d. draws from
    [low, high] with the scenario seed (numpy PCG64). kind "progression":
    ratios 1 + n/denominator for n = 1..count.
    """

    kind: str
    ratios: tuple[float, ...] = ()
    low: float = 0.0
    high: float = 0.0
    count: int = 0
    denominator: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("explicit", "uniform", "progression"):
            raise ScenarioError(f"unknown spectrum kind {self.kind!r}")
        if self.kind == "explicit" and not self.ratios:
            raise ScenarioError("explicit spectrum needs ratios")
        if self.kind == "uniform" and not (self.count > 0 and self.high >= self.low > 0.0):
            raise ScenarioError("uniform spectrum needs 0 < low <= high and count > 0")
        if self.kind == "progression" and not (self.count > 0 and self.denominator > 0):
            raise ScenarioError("progression spectrum needs positive count and denominator")

    @property
    def n_env(self) -> int:
        if self.kind == "explicit":
            return len(self.ratios)
        return self.count

    def draw(self, seed: int | None) -> tuple[float, ...]:
        if self.kind == "explicit":
            return self.ratios
        if self.kind == "progression":
            return tuple(1.0 + n / self.denominator for n in range(1, self.count + 1))
        if seed is None:
            raise ScenarioError("a uniform spectrum requires a seed")
        rng = np.random.default_rng(seed)
        return tuple(rng.uniform(self.low, self.high, self.count))


def explicit_spectrum(*ratios: float) -> SpectrumSpec:
    return SpectrumSpec(kind="explicit", ratios=tuple(ratios))


def uniform_spectrum(low: float, high: float, count: int) -> SpectrumSpec:
    return SpectrumSpec(kind="uniform", low=low, high=high, count=count)


def progression_spectrum(count: int, denominator: int) -> SpectrumSpec:
    return SpectrumSpec(kind="progression", count=count, denominator=denominator)


@dataclass(frozen=True)
class Scenario:
    """One reproducible simulation setup."""

    name: str
    spectrum: SpectrumSpec
    coupling_ratio: float  # lambda / omega0^2, common to all modes
    beta_omega0: float  # beta * omega0; math.inf for T = 0
    methods: tuple[str, ...]
    t_end: float
    sample_count: int
    omega0: float = 1.0
    ic_kind: str = IC_PURE_THERMAL
    seed: int | None = None
    lambdas_override: tuple[float, ...] | None = None  # per-mode couplings
    # Conservation-grade defaults; ensemble studies that only need a few
    # digits may relax these.
    rel_tol_exact: float = EXACT_REL_TOL
    abs_tol_exact: float = EXACT_ABS_TOL

    def __post_init__(self) -> None:
        if not self.methods:
            raise ScenarioError("scenario needs at least one method")
        for m in self.methods:
            if m not in ALL_METHODS:
                raise ScenarioError(f"unknown method {m!r}")
        n = self.spectrum.n_env
        if n != 1 and (_N1_METHODS & set(self.methods)):
            raise ScenarioError("analytic-n1 and density-matrix-n1 require N = 1")
        if self.ic_kind not in (IC_PURE_THERMAL, IC_TIME_TRANSLATION):
            raise ScenarioError(f"unknown ic kind {self.ic_kind!r}")
        if self.ic_kind == IC_TIME_TRANSLATION:
            if n != 1:
                raise ScenarioError("time-translation-invariant ic requires N = 1")
            if _MASTER_METHODS & set(self.methods):
                raise ScenarioError(
                    "master methods assume a separable initial state; "
                    "the time-translation-invariant state is entangled"
                )
        if not self.beta_omega0 > 0.0:
            raise ScenarioError("beta_omega0 must be positive (math.inf for T = 0)")
        if not (self.t_end > 0.0 and self.sample_count >= 2):
            raise ScenarioError("need t_end > 0 and at least two samples")

    @property
    def beta(self) -> float:
        return self.beta_omega0 / self.omega0

    def build_params(self) -> exact.ModelParams:
        ratios = self.spectrum.draw(self.seed)
        omegas = tuple(r * self.omega0 for r in ratios)
        if self.lambdas_override is not None:
            return exact.ModelParams(
                omega0=self.omega0, omegas=omegas, lambdas=self.lambdas_override
            )
        lam = self.coupling_ratio * self.omega0**2
        return exact.ModelParams.with_common_coupling(self.omega0, omegas, lam)

    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.t_end, self.sample_count)


@dataclass
class MethodSeries:
    """Per-method trajectory on the shared grid.

    delta is NaN wherever the state is unphysical beyond the tolerated band;
    delta_sq keeps the raw value so breakdown analysis can see the crossing.
    """

    method: str
    delta: np.ndarray
    entropy: np.ndarray
    delta_sq: np.ndarray
    env_entropy: np.ndarray | None = None
    corr_entropy: np.ndarray | None = None
    unphysical: np.ndarray | None = None  # bool per sample
    first_unphysical_time: float | None = None
    breakdown_time: float | None = None
    error: str | None = None
    extras: dict = field(default_factory=dict)


@dataclass
class ScenarioResult:
    scenario: Scenario
    params: exact.ModelParams
    times: np.ndarray
    series: dict[str, MethodSeries]
    gamma: np.ndarray | None
    thermal_delta: float
    thermal_entropy: float
    metadata: dict

    def method(self, name: str) -> MethodSeries:
        return self.series[name]


def thermal_baseline(beta: float, omega0: float) -> tuple[float, float]:
    """(Delta_th, S_th) of the system oscillator thermalized at beta."""
    delta_th = ThermalSpec(beta=beta, omega=omega0).coth_factor()
    return delta_th, gaussian.entropy_from_delta(delta_th)


def _delta_entropy_from_delta_sq(delta_sq: np.ndarray):
    """Apply the clamp/NaN policy to a raw Delta^2 series."""
    n = delta_sq.size
    delta = np.full(n, np.nan)
    entropy = np.full(n, np.nan)
    unphys = ~np.isfinite(delta_sq) | (delta_sq < 1.0 - DELTA_SQ_BAND)
    ok = ~unphys
    clamped = ok & (delta_sq < 1.0)
    delta[ok] = np.sqrt(np.maximum(delta_sq[ok], 1.0))
    delta[clamped] = 1.0
    for i in np.nonzero(ok)[0]:
        entropy[i] = gaussian.entropy_from_delta(float(delta[i]))
    return delta, entropy, unphys


def decoherence_rate(
    times: np.ndarray,
    delta: np.ndarray,
    window: float,
    fastest_frequency: float | None = None,
) -> np.ndarray:
    """Gamma(t) = -dDelta/dt / Delta, moving-averaged over `window`.

    The derivative is central-differenced; the average uses a centered box
    truncated at the ends. With fastest_frequency given, the sampling must
    resolve at least 20 points per 2 pi / fastest_frequency.
    """
    times = np.asarray(times, dtype=float)
    delta = np.asarray(delta, dtype=float)
    if times.size < 3:
        raise InsufficientSampling("need at least 3 samples")
    dt = times[1] - times[0]
    if fastest_frequency is not None:
        period = 2.0 * math.pi / fastest_frequency
        if dt > period / 20.0:
            raise InsufficientSampling(
                f"sample spacing {dt} too coarse for period {period} (need >= 20 per period)"
            )
    ddelta = np.gradient(delta, times)
    with np.errstate(divide="ignore", invalid="ignore"):
        raw = -ddelta / delta
    half = max(1, int(round(0.5 * window / dt)))
    out = np.full_like(raw, np.nan)
    for i in range(raw.size):
        lo, hi = max(0, i - half), min(raw.size, i + half + 1)
        seg = raw[lo:hi]
        if np.all(np.isfinite(seg)):
            out[i] = float(np.mean(seg))
    return out


def _breakdown_time(times, delta_sq, entropy, s_th) -> float | None:
    """First time the master solution leaves the physical window.

    Fires when the effective phase-space area goes negative (Delta^2 < 0),
    when the state stops being finite, or when S > S_th + max(0.5, S_th).
    Perturbative transients dip Delta^2 slightly below 1 even in healthy
    runs, so the area condition triggers on sign change, not on the
    tolerance band used for the per-sample unphysical flag.
    """
    bound = s_th + max(0.5, s_th)
    with np.errstate(invalid="ignore"):
        bad = ~np.isfinite(delta_sq) | (delta_sq < 0.0) | (entropy > bound)
    idx = np.nonzero(bad)[0]
    return float(times[idx[0]]) if idx.size else None


def _initial_covariance(s: Scenario, params: exact.ModelParams) -> np.ndarray:
    if s.ic_kind == IC_TIME_TRANSLATION:
        return exact.time_translation_invariant_cov(
            params.omega0, params.omegas[0], params.lambdas[0]
        )
    return exact.pure_thermal_ic(params, s.beta).cov


def _run_exact(s: Scenario, params, times) -> MethodSeries:
    cov0 = _initial_covariance(s, params)
    opts = IntegratorOpts(
        output_times=times,
        rel_tol=s.rel_tol_exact,
        abs_tol=s.abs_tol_exact,
        max_step=0.05 / params.omega_max,
    )
    states = exact.evolve(params, exact.CorrelatorState(cov=cov0), float(times[-1]), opts)
    n = times.size
    n_env = params.n_env
    delta_sq = np.empty(n)
    env_entropy = np.zeros(n)
    energies = np.empty(n)
    dets = np.empty(n)
    env_delta_min = np.inf
    for i, st in enumerate(states):
        tri = st.mode_triple(0)
        delta_sq[i] = 4.0 * tri.uncertainty_product()
        for m in range(1, n_env + 1):
            trim = st.mode_triple(m)
            dsq = 4.0 * trim.uncertainty_product()
            env_delta_min = min(env_delta_min, math.sqrt(max(dsq, 0.0)))
            env_entropy[i] += gaussian.entropy_from_delta(
                gaussian.phase_space_area_from_delta_sq(dsq)
            )
        energies[i] = exact.energy(params, st)
        dets[i] = np.linalg.slogdet(st.cov)[1]
    delta, entropy, unphys = _delta_entropy_from_delta_sq(delta_sq)
    corr = (entropy[0] + env_entropy[0]) - (entropy + env_entropy)
    e0 = energies[0]
    energy_drift = float(np.max(np.abs(energies - e0)) / abs(e0)) if e0 else 0.0
    det_drift = float(np.max(np.abs(np.expm1(dets - dets[0]))))
    return MethodSeries(
        method=METHOD_EXACT,
        delta=delta,
        entropy=entropy,
        delta_sq=delta_sq,
        env_entropy=env_entropy,
        corr_entropy=corr,
        unphysical=unphys,
        extras={
            "energy_drift": energy_drift,
            "det_drift": det_drift,
            "energy0": e0,
            "min_subsystem_delta": min(
                env_delta_min, float(np.nanmin(np.sqrt(np.maximum(delta_sq, 0.0))))
            ),
        },
    )


def _run_analytic(s: Scenario, params, times) -> MethodSeries:
    basis = analytic.diagonalize(params.omega0, params.omegas[0], params.lambdas[0])
    ic10 = analytic.InitialConditions10.from_covariance(_initial_covariance(s, params))
    amps = analytic.amplitudes_from_ics(basis, ic10)
    fx = analytic.propagator_x(basis, amps)
    fq = analytic.propagator_q(basis, amps)
    delta_sq = analytic.delta_series(fx, times)
    delta, entropy, unphys = _delta_entropy_from_delta_sq(delta_sq)
    env_sq = analytic.delta_series(fq, times)
    env_entropy = np.array([
        gaussian.entropy_from_delta(gaussian.phase_space_area_from_delta_sq(float(d)))
        for d in env_sq
    ])
    corr = (entropy[0] + env_entropy[0]) - (entropy + env_entropy)
    return MethodSeries(
        method=METHOD_ANALYTIC,
        delta=delta,
        entropy=entropy,
        delta_sq=delta_sq,
        env_entropy=env_entropy,
        corr_entropy=corr,
        unphysical=unphys,
    )


def _master_series(method, times, triples, s_th) -> MethodSeries:
    xx, pp, xp = triples[:, 0], triples[:, 1], triples[:, 2]
    with np.errstate(over="ignore", invalid="ignore"):
        delta_sq = 4.0 * (xx * pp - xp**2)
    delta, entropy, unphys = _delta_entropy_from_delta_sq(delta_sq)
    first_bad = float(times[np.nonzero(unphys)[0][0]]) if np.any(unphys) else None
    return MethodSeries(
        method=method,
        delta=delta,
        entropy=entropy,
        delta_sq=delta_sq,
        unphysical=unphys,
        first_unphysical_time=first_bad,
        breakdown_time=_breakdown_time(times, delta_sq, entropy, s_th),
    )


def _master_opts(params, times) -> IntegratorOpts:
    return IntegratorOpts(
        output_times=times,
        rel_tol=MASTER_REL_TOL,
        abs_tol=MASTER_ABS_TOL,
        max_step=0.05 / params.omega_max,
    )


def _run_master_correlator(s: Scenario, params, times, s_th) -> MethodSeries:
    c0 = CorrelatorTriple(xx=1.0 / (2.0 * params.omega0), pp=0.5 * params.omega0, xp=0.0)
    triples = master.evolve_master_correlators(params, s.beta, c0, _master_opts(params, times))
    return _master_series(METHOD_MASTER, times, triples, s_th)


def _run_master_coeff(s: Scenario, params, times, s_th) -> MethodSeries:
    g0 = gaussian.correlators_to_coeffs(
        CorrelatorTriple(xx=1.0 / (2.0 * params.omega0), pp=0.5 * params.omega0, xp=0.0)
    )
    rows = master.evolve_master_coeffs(params, s.beta, g0, _master_opts(params, times))
    triples = np.empty((rows.shape[0], 3))
    for i, (ar, ai, c, _ln) in enumerate(rows):
        tri = gaussian.coeffs_to_correlators(
            gaussian.GaussianCoeffs1D(a=complex(ar, ai), c=c, log_norm=_ln)
        )
        triples[i] = (tri.xx, tri.pp, tri.xp)
    return _master_series(METHOD_MASTER_COEFF, times, triples, s_th)


def _run_density_matrix(s: Scenario, params, times) -> MethodSeries:
    cov0 = _initial_covariance(s, params)
    g0 = density_matrix.coeffs2d_from_covariance(cov0)
    opts = IntegratorOpts(
        output_times=times,
        rel_tol=s.rel_tol_exact,
        abs_tol=s.abs_tol_exact,
        max_step=0.05 / params.omega_max,
    )
    snaps = density_matrix.evolve_density_matrix(
        params.omega0, params.omegas[0], params.lambdas[0], g0, opts
    )
    delta_sq = np.array([density_matrix.reduced_delta_sq(g) for g in snaps])
    delta, entropy, unphys = _delta_entropy_from_delta_sq(delta_sq)
    norm_err = max(
        abs(g.log_norm - density_matrix.log_norm_closed_form(g)) for g in snaps
    )
    return MethodSeries(
        method=METHOD_DM,
        delta=delta,
        entropy=entropy,
        delta_sq=delta_sq,
        unphysical=unphys,
        extras={"log_norm_drift": norm_err},
    )


def _fastest_frequency(params: exact.ModelParams) -> float:
    return math.sqrt(float(np.linalg.eigvalsh(params.frequency_matrix())[-1]))


def run_scenario(s: Scenario) -> ScenarioResult:
    """Run every requested method on the shared grid.

    Per-method exceptions are captured on the MethodSeries (`error`), leaving
    the other methods intact. Metadata records the seed, the drawn
    frequencies, tolerances and wall time.
    """
    t0 = _time.perf_counter()
    params = s.build_params()
    times = s.times()
    delta_th, s_th = thermal_baseline(s.beta, params.omega0)
    series: dict[str, MethodSeries] = {}
    runners = {
        METHOD_EXACT: lambda: _run_exact(s, params, times),
        METHOD_ANALYTIC: lambda: _run_analytic(s, params, times),
        METHOD_MASTER: lambda: _run_master_correlator(s, params, times, s_th),
        METHOD_MASTER_COEFF: lambda: _run_master_coeff(s, params, times, s_th),
        METHOD_DM: lambda: _run_density_matrix(s, params, times),
    }
    for m in s.methods:
        try:
            series[m] = runners[m]()
        except Exception as err:  # recorded, not fatal to other methods
            series[m] = MethodSeries(
                method=m,
                delta=np.full(times.size, np.nan),
                entropy=np.full(times.size, np.nan),
                delta_sq=np.full(times.size, np.nan),
                error=f"{type(err).__name__}: {err}",
            )

    gamma = None
    for m in (METHOD_EXACT, METHOD_ANALYTIC, METHOD_MASTER, METHOD_MASTER_COEFF, METHOD_DM):
        sr = series.get(m)
        if sr is not None and sr.error is None:
            try:
                gamma = decoherence_rate(
                    times, sr.delta, window=2.0 * math.pi / params.omega0,
                    fastest_frequency=_fastest_frequency(params),
                )
            except InsufficientSampling:
                gamma = None
            break

    metadata = {
        "name": s.name,
        "omega0": params.omega0,
        "omegas": list(params.omegas),
        "lambdas": list(params.lambdas),
        "beta_omega0": s.beta_omega0,
        "ic": s.ic_kind,
        "methods": list(s.methods),
        "t_end": s.t_end,
        "sample_count": s.sample_count,
        "seed": s.seed,
        "rng": "numpy-pcg64",
        "exact_rel_tol": s.rel_tol_exact,
        "exact_abs_tol": s.abs_tol_exact,
        "master_rel_tol": MASTER_REL_TOL,
        "master_abs_tol": MASTER_ABS_TOL,
        "thermal_delta": delta_th,
        "thermal_entropy": s_th,
        "wall_time_s": None,  # filled below; kept out of CSV output
    }
    for m, sr in series.items():
        key = METHOD_KEYS[m]
        if sr.error is not None:
            metadata[f"error_{key}"] = sr.error
        if sr.breakdown_time is not None:
            metadata[f"breakdown_time_{key}"] = sr.breakdown_time
        if sr.first_unphysical_time is not None:
            metadata[f"first_unphysical_time_{key}"] = sr.first_unphysical_time
        metadata.update({f"{k}_{key}": v for k, v in sr.extras.items()})
    metadata["wall_time_s"] = _time.perf_counter() - t0
    return ScenarioResult(
        scenario=s,
        params=params,
        times=times,
        series=series,
        gamma=gamma,
        thermal_delta=delta_th,
        thermal_entropy=s_th,
        metadata=metadata,
    )


def _n1_all_methods(name, ratio, coupling, beta, t_end, samples, methods=None):
    return Scenario(
        name=name,
        spectrum=explicit_spectrum(ratio),
        coupling_ratio=coupling,
        beta_omega0=beta,
        methods=methods or (METHOD_EXACT, METHOD_ANALYTIC, METHOD_MASTER,
                            METHOD_MASTER_COEFF, METHOD_DM),
        t_end=t_end,
        sample_count=samples,
    )


_FIG7_BETA = math.atanh(0.5)  # coth(beta omega1 / 2) = omega1/omega0 = 2 at omega1 = 2

_PRESETS: dict[str, Scenario] = {
    # N = 1: phase-space area, then entropy, for cold and warm environments.
    "fig1": _n1_all_methods("fig1", 2.0, 0.5, 2000.0, 50.0, 501),
    "fig2": _n1_all_methods("fig2", 2.0, 0.5, 0.2, 50.0, 501),
    "fig3": _n1_all_methods("fig3", 2.0, 0.5, 2000.0, 50.0, 501,
                            methods=(METHOD_EXACT, METHOD_ANALYTIC, METHOD_MASTER)),
    "fig4": _n1_all_methods("fig4", 2.0, 0.5, 0.2, 50.0, 501,
                            methods=(METHOD_EXACT, METHOD_ANALYTIC, METHOD_MASTER)),
    # Late-time recurrences of the warm N = 1 case.
    "fig5": _n1_all_methods("fig5", 2.0, 0.5, 0.2, 600.0, 4001,
                            methods=(METHOD_EXACT, METHOD_MASTER)),
    # Resonant N = 1: the perturbative evolution destabilizes.
    "fig6": _n1_all_methods("fig6", 201.0 / 200.0, 0.25, 0.2, 300.0, 3001,
                            methods=(METHOD_EXACT, METHOD_ANALYTIC, METHOD_MASTER)),
    # Entangled fixed-point state: nothing moves despite the coupling.
    "fig7": Scenario(
        name="fig7",
        spectrum=explicit_spectrum(2.0),
        coupling_ratio=0.25,
        beta_omega0=_FIG7_BETA,
        ic_kind=IC_TIME_TRANSLATION,
        methods=(METHOD_EXACT, METHOD_ANALYTIC),
        t_end=100.0,
        sample_count=1001,
    ),
    # N = 50 ensembles.
    "fig8": Scenario(
        name="fig8",
        spectrum=uniform_spectrum(0.9, 1.1, 50),
        coupling_ratio=1.0 / 40.0,
        beta_omega0=1.0,
        methods=(METHOD_EXACT, METHOD_MASTER),
        t_end=600.0,
        sample_count=2401,
        seed=20108,
    ),
    "fig9": Scenario(
        name="fig9",
        spectrum=progression_spectrum(50, 50),
        coupling_ratio=3.0 / 40.0,
        beta_omega0=2.0,
        methods=(METHOD_EXACT, METHOD_MASTER),
        t_end=400.0,
        sample_count=3201,
    ),
    "fig10": Scenario(
        name="fig10",
        spectrum=progression_spectrum(50, 100),
        coupling_ratio=3.0 / 40.0,
        beta_omega0=2.0,
        methods=(METHOD_EXACT, METHOD_MASTER),
        t_end=400.0,
        sample_count=2401,
    ),
    "fig11": Scenario(
        name="fig11",
        spectrum=uniform_spectrum(0.75, 1.5, 50),
        coupling_ratio=1.0 / 16.0,
        beta_omega0=2.0,
        methods=(METHOD_EXACT, METHOD_MASTER),
        t_end=600.0,
        sample_count=3601,
        seed=20111,
    ),
    "fig12": Scenario(
        name="fig12",
        spectrum=uniform_spectrum(0.95, 1.05, 50),
        coupling_ratio=0.1,
        beta_omega0=0.1,
        methods=(METHOD_EXACT, METHOD_MASTER),
        t_end=300.0,
        sample_count=1501,
        seed=20112,
    ),
}


def preset(name: str) -> Scenario:
    """Exact parameter transcription of one figure scenario."""
    try:
        return _PRESETS[name]
    except KeyError:
        raise UnknownPreset(
            f"unknown preset {name!r}; choose from {', '.join(sorted(_PRESETS))}"
        ) from None


def list_presets() -> tuple[str, ...]:
    return tuple(_PRESETS)


def nonresonant_average_scenario(seed: int) -> Scenario:
    """Weak-coupling N = 50 ensemble far above resonance.

    Environment ratios in [2, 3], coupling ratio 1/8, beta omega0 = 2; the
    long-run average system entropy stays well below the thermal value.
    """
    return Scenario(
        name=f"nonresonant-n50-seed{seed}",
        spectrum=uniform_spectrum(2.0, 3.0, 50),
        coupling_ratio=1.0 / 8.0,
        beta_omega0=2.0,
        methods=(METHOD_EXACT,),
        t_end=300.0,
        sample_count=3001,
        seed=seed,
        rel_tol_exact=1e-9,
        abs_tol_exact=1e-11,
    )
