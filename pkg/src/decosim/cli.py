"""Command-line interface.

    decosim run --preset fig1 --outdir out/
    decosim run --config scenario.cfg --outdir out/ --no-plot
    decosim list-presets
    decosim sweep --preset fig8 --param lambda_over_omega0sq \
            --values 0.025,0.05,0.1 --outdir sweep/

Each run writes a combined CSV, one CSV per method, and (unless --no-plot)
PNG figures into the output directory. Exit code 0 on success; failures
print one machine-readable `error: ...` line on stderr and exit nonzero.

Everything is controlled by flags or the config file; the only environment
variable honored is DECOSIM_OUTDIR as a fallback when --outdir is omitted.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys
from pathlib import Path

from . import output, scenarios
from .errors import DecosimError
from .scenarios import Scenario, run_scenario


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="decosim",
        description="Entropy generation in coupled-oscillator decoherence scenarios",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run one scenario and write CSV/figures")
    src = run_p.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", help="figure preset name (see list-presets)")
    src.add_argument("--config", help="path to a key = value scenario config")
    run_p.add_argument("--outdir", help="output directory (or set DECOSIM_OUTDIR)")
    run_p.add_argument("--seed", type=int, help="override the scenario seed")
    run_p.add_argument("--t-end", type=float, dest="t_end", help="override the horizon")
    run_p.add_argument("--samples", type=int, help="override the sample count")
    run_p.add_argument("--methods", help="override methods (comma list)")
    run_p.add_argument("--no-plot", action="store_true", help="skip PNG rendering")

    sub.add_parser("list-presets", help="list figure presets and their parameters")

    sweep_p = sub.add_parser("sweep", help="run a scenario across parameter values")
    ssrc = sweep_p.add_mutually_exclusive_group(required=True)
    ssrc.add_argument("--preset")
    ssrc.add_argument("--config")
    sweep_p.add_argument("--param", required=True,
                         help="scenario field: lambda_over_omega0sq | beta_omega0 | "
                              "seed | t_end | sample_count")
    sweep_p.add_argument("--values", required=True, help="comma list of values")
    sweep_p.add_argument("--outdir", help="output directory (or set DECOSIM_OUTDIR)")
    sweep_p.add_argument("--no-plot", action="store_true")
    return parser


def _resolve_outdir(args) -> Path:
    outdir = args.outdir or os.environ.get("DECOSIM_OUTDIR")
    if not outdir:
        raise DecosimError("no output directory: pass --outdir or set DECOSIM_OUTDIR")
    return Path(outdir)


def _base_scenario(args) -> Scenario:
    if args.preset:
        return scenarios.preset(args.preset)
    return output.load_scenario(args.config)


def _apply_overrides(s: Scenario, args) -> Scenario:
    updates = {}
    if getattr(args, "seed", None) is not None:
        updates["seed"] = args.seed
    if getattr(args, "t_end", None) is not None:
        updates["t_end"] = args.t_end
    if getattr(args, "samples", None) is not None:
        updates["sample_count"] = args.samples
    if getattr(args, "methods", None):
        updates["methods"] = tuple(m.strip() for m in args.methods.split(","))
    return dataclasses.replace(s, **updates) if updates else s


_SWEEP_FIELDS = {
    "lambda_over_omega0sq": ("coupling_ratio", float),
    "beta_omega0": ("beta_omega0", float),
    "seed": ("seed", int),
    "t_end": ("t_end", float),
    "sample_count": ("sample_count", int),
}


def _run_one(s: Scenario, outdir: Path, plot: bool) -> None:
    print(f"[decosim] running {s.name}: N={s.spectrum.n_env}, "
          f"lambda/omega0^2={s.coupling_ratio}, beta*omega0={s.beta_omega0}, "
          f"t_end={s.t_end}, methods={','.join(s.methods)}")
    result = run_scenario(s)
    paths = output.write_outputs(result, outdir)
    if plot:
        from . import plots  # deferred: matplotlib import is slow

        paths += plots.render(result, outdir)
    for m, sr in result.series.items():
        if sr.error is not None:
            print(f"[decosim]   {m}: FAILED ({sr.error})")
        elif sr.breakdown_time is not None:
            print(f"[decosim]   {m}: breakdown detected at t = {sr.breakdown_time:g}")
    print(f"[decosim] wall time {result.metadata['wall_time_s']:.2f} s; wrote:")
    for p in paths:
        print(f"[decosim]   {p}")


def _cmd_run(args) -> int:
    s = _apply_overrides(_base_scenario(args), args)
    _run_one(s, _resolve_outdir(args), plot=not args.no_plot)
    return 0


def _cmd_list_presets(_args) -> int:
    for name in scenarios.list_presets():
        s = scenarios.preset(name)
        spec = s.spectrum
        if spec.kind == "explicit":
            freq = f"omega_n/omega0={','.join(f'{r:g}' for r in spec.ratios)}"
        elif spec.kind == "uniform":
            freq = f"omega_n/omega0 in [{spec.low:g},{spec.high:g}] x{spec.count} (seed {s.seed})"
        else:
            freq = f"omega_n/omega0 = 1+n/{spec.denominator}, n=1..{spec.count}"
        print(f"{name:6s} N={spec.n_env:3d}  {freq:45s} lambda/omega0^2={s.coupling_ratio:<8g} "
              f"beta*omega0={s.beta_omega0:<8g} ic={s.ic_kind} t_end={s.t_end:g}")
    return 0


def _cmd_sweep(args) -> int:
    base = _base_scenario(args)
    if args.param not in _SWEEP_FIELDS:
        raise DecosimError(
            f"unknown sweep parameter {args.param!r}; choose from {', '.join(_SWEEP_FIELDS)}"
        )
    field, cast = _SWEEP_FIELDS[args.param]
    outdir = _resolve_outdir(args)
    for raw in args.values.split(","):
        value = cast(raw.strip())
        s = dataclasses.replace(base, **{field: value})
        s = dataclasses.replace(s, name=f"{base.name}_{args.param}={raw.strip()}")
        _run_one(s, outdir / s.name, plot=not args.no_plot)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "run": _cmd_run,
        "list-presets": _cmd_list_presets,
        "sweep": _cmd_sweep,
    }
    try:
        return handlers[args.command](args)
    except DecosimError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
