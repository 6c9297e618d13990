"""CSV export and the flat key = value config format.

CSV files start with `# key=value` comment lines echoing the scenario
(seed, drawn frequencies, tolerances), followed by a header row and one row
per sample with 12 significant digits. Writes are atomic (temp file plus
rename) and contain nothing time-dependent, so rerunning the same seeded
scenario reproduces the file byte for byte.
"""

from __future__ import annotations

import math
import os
import tempfile
from pathlib import Path

import numpy as np

from .errors import ScenarioError
from .scenarios import (
    ALL_METHODS,
    METHOD_KEYS,
    Scenario,
    ScenarioResult,
    SpectrumSpec,
    explicit_spectrum,
    progression_spectrum,
    uniform_spectrum,
)

# Metadata keys that change between reruns; excluded from CSV comments.
_VOLATILE_KEYS = ("wall_time_s",)


def _fmt(x) -> str:
    if x is None:
        return "nan"
    x = float(x)
    if math.isnan(x):
        return "nan"
    return f"{x:.11e}"


def _fmt_meta(value) -> str:
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return ",".join(_fmt_meta(v) for v in value)
    return str(value)


def csv_columns(result: ScenarioResult) -> tuple[list[str], list[np.ndarray]]:
    """Column names and arrays for the combined CSV, in a stable order."""
    names = ["t"]
    cols: list[np.ndarray] = [result.times]
    n = result.times.size
    for method in ALL_METHODS:
        sr = result.series.get(method)
        if sr is None:
            continue
        key = METHOD_KEYS[method]
        names += [f"delta_{key}", f"S_{key}"]
        cols += [sr.delta, sr.entropy]
        # the exact method owns the canonical environment/correlation columns
        env_suffix = "" if method == "exact" else f"_{key}"
        if sr.env_entropy is not None:
            names.append(f"S_env{env_suffix}")
            cols.append(sr.env_entropy)
        if sr.corr_entropy is not None:
            names.append(f"S_corr{env_suffix}")
            cols.append(sr.corr_entropy)
    names.append("gamma")
    cols.append(result.gamma if result.gamma is not None else np.full(n, np.nan))
    unphys = np.zeros(n)
    breakdown = np.zeros(n)
    for sr in result.series.values():
        if sr.unphysical is not None:
            unphys = np.maximum(unphys, sr.unphysical.astype(float))
        if sr.breakdown_time is not None:
            breakdown = np.maximum(breakdown, (result.times >= sr.breakdown_time).astype(float))
    names += ["flag_unphysical", "flag_breakdown"]
    cols += [unphys, breakdown]
    return names, cols


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit_csv(result: ScenarioResult, path: str | Path) -> Path:
    """Write the combined trajectory CSV; returns the written path."""
    path = Path(path)
    if result.times.size == 0 or not result.series:
        raise ScenarioError("refusing to write an empty trajectory")
    names, cols = csv_columns(result)
    lines = []
    for key, value in result.metadata.items():
        if key in _VOLATILE_KEYS or value is None:
            continue
        lines.append(f"# {key}={_fmt_meta(value)}")
    lines.append(",".join(names))
    for i in range(result.times.size):
        lines.append(",".join(_fmt(col[i]) for col in cols))
    _atomic_write(path, "\n".join(lines) + "\n")
    return path


def emit_method_csv(result: ScenarioResult, method: str, path: str | Path) -> Path:
    """Write one method's columns only."""
    path = Path(path)
    sr = result.series.get(method)
    if sr is None:
        raise ScenarioError(f"method {method!r} was not run")
    key = METHOD_KEYS[method]
    names = ["t", f"delta_{key}", f"S_{key}"]
    cols = [result.times, sr.delta, sr.entropy]
    env_suffix = "" if method == "exact" else f"_{key}"
    if sr.env_entropy is not None:
        names.append(f"S_env{env_suffix}")
        cols.append(sr.env_entropy)
    if sr.corr_entropy is not None:
        names.append(f"S_corr{env_suffix}")
        cols.append(sr.corr_entropy)
    lines = [f"# name={result.metadata['name']}", f"# method={method}"]
    lines.append(",".join(names))
    for i in range(result.times.size):
        lines.append(",".join(_fmt(col[i]) for col in cols))
    _atomic_write(path, "\n".join(lines) + "\n")
    return path


def write_outputs(result: ScenarioResult, outdir: str | Path) -> list[Path]:
    """Combined CSV plus one CSV per method under outdir."""
    outdir = Path(outdir)
    name = result.scenario.name
    written = [emit_csv(result, outdir / f"{name}_combined.csv")]
    for method in result.scenario.methods:
        key = METHOD_KEYS[method]
        written.append(emit_method_csv(result, method, outdir / f"{name}_{key}.csv"))
    return written


def parse_config(text: str) -> dict[str, str]:
    """Parse the flat `key = value` format; `#` starts a comment."""
    conf: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ScenarioError(f"config line {lineno}: expected key = value, got {raw!r}")
        key, value = line.split("=", 1)
        conf[key.strip()] = value.strip()
    return conf


def _parse_spectrum(conf: dict[str, str]) -> SpectrumSpec:
    kind = conf.get("spectrum", "explicit")
    if kind == "explicit":
        ratios = conf.get("omega_ratios")
        if not ratios:
            raise ScenarioError("explicit spectrum needs omega_ratios = r1,r2,...")
        return explicit_spectrum(*(float(r) for r in ratios.split(",")))
    if kind == "uniform":
        return uniform_spectrum(
            float(conf["omega_low"]), float(conf["omega_high"]), int(conf["count"])
        )
    if kind == "progression":
        return progression_spectrum(int(conf["count"]), int(conf["denominator"]))
    raise ScenarioError(f"unknown spectrum kind {kind!r}")


def scenario_from_config(conf: dict[str, str]) -> Scenario:
    """Build a Scenario from parsed config keys.

    Required: name, lambda_over_omega0sq, beta_omega0, methods, t_end,
    sample_count, and the spectrum keys. Optional: omega0, ic, seed.
    """
    try:
        beta = conf["beta_omega0"]
        return Scenario(
            name=conf["name"],
            spectrum=_parse_spectrum(conf),
            coupling_ratio=float(conf["lambda_over_omega0sq"]),
            beta_omega0=math.inf if beta.lower() in ("inf", "infinity") else float(beta),
            methods=tuple(m.strip() for m in conf["methods"].split(",")),
            t_end=float(conf["t_end"]),
            sample_count=int(conf["sample_count"]),
            omega0=float(conf.get("omega0", "1.0")),
            ic_kind=conf.get("ic", "pure-thermal"),
            seed=int(conf["seed"]) if "seed" in conf else None,
        )
    except KeyError as err:
        raise ScenarioError(f"config is missing required key {err.args[0]!r}") from None


def load_scenario(path: str | Path) -> Scenario:
    return scenario_from_config(parse_config(Path(path).read_text()))
