"""Figure rendering for scenario results.

Saves PNG files next to the CSV output: a phase-space-area panel and an
entropy panel per scenario. Line styling follows the usual convention here:
solid black for the exact correlator evolution, solid gray for the master
equation, dashed black for the environment entropy, dashed gray for the
correlation entropy, and a dotted line at the thermal entropy.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .scenarios import (
    METHOD_ANALYTIC,
    METHOD_DM,
    METHOD_EXACT,
    METHOD_MASTER,
    METHOD_MASTER_COEFF,
    ScenarioResult,
)

_STYLES = {
    METHOD_EXACT: dict(color="black", lw=1.2, label="exact correlators"),
    METHOD_MASTER: dict(color="0.55", lw=1.2, label="master equation"),
    METHOD_MASTER_COEFF: dict(color="0.55", lw=1.0, ls="-.", label="master (coeff form)"),
    METHOD_ANALYTIC: dict(color="tab:blue", lw=0.9, ls=":", label="closed form"),
    METHOD_DM: dict(color="tab:red", lw=0.9, ls=":", label="density matrix"),
}


def _finite(times, series):
    mask = np.isfinite(series)
    return times[mask], series[mask]


def render_delta(result: ScenarioResult, path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    for method, style in _STYLES.items():
        sr = result.series.get(method)
        if sr is None or sr.error is not None:
            continue
        ax.plot(*_finite(result.times, sr.delta), **style)
    ax.axhline(result.thermal_delta, color="0.3", ls=":", lw=0.8, label="thermal")
    ax.set_xlabel(r"$\omega_0 t$")
    ax.set_ylabel(r"phase-space area $\Delta$")
    ax.set_title(result.scenario.name)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_entropy(result: ScenarioResult, path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    for method, style in _STYLES.items():
        sr = result.series.get(method)
        if sr is None or sr.error is not None:
            continue
        ax.plot(*_finite(result.times, sr.entropy), **style)
        if sr.env_entropy is not None and method == METHOD_EXACT:
            ax.plot(result.times, sr.env_entropy, color="black", ls="--", lw=0.9,
                    label="environment")
            ax.plot(result.times, sr.corr_entropy, color="0.55", ls="--", lw=0.9,
                    label="correlation")
    ax.axhline(result.thermal_entropy, color="0.3", ls=":", lw=0.8, label="thermal")
    ax.set_xlabel(r"$\omega_0 t$")
    ax.set_ylabel(r"entropy $S$")
    ax.set_title(result.scenario.name)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render(result: ScenarioResult, outdir: str | Path) -> list[Path]:
    """Both panels; returns the written paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    name = result.scenario.name
    return [
        render_delta(result, outdir / f"{name}_delta.png"),
        render_entropy(result, outdir / f"{name}_entropy.png"),
    ]
