"""Command-line interface behavior and artifact layout."""

import pytest

from decosim.cli import main

CONFIG = """
name = clidemo
spectrum = explicit
omega_ratios = 2.0
lambda_over_omega0sq = 0.5
beta_omega0 = 0.2
methods = exact, master-correlator
t_end = 4
sample_count = 81
"""


def test_list_presets(capsys):
    assert main(["list-presets"]) == 0
    out = capsys.readouterr().out
    for name in ("fig1", "fig7", "fig12"):
        assert name in out
    assert "time-translation-invariant" in out


def test_run_preset_with_overrides(tmp_path, capsys):
    rc = main([
        "run", "--preset", "fig1", "--outdir", str(tmp_path),
        "--t-end", "4", "--samples", "81",
        "--methods", "exact,analytic-n1", "--no-plot",
    ])
    assert rc == 0
    files = sorted(p.name for p in tmp_path.iterdir())
    assert files == ["fig1_analytic.csv", "fig1_combined.csv", "fig1_exact.csv"]


def test_run_renders_figures_by_default(tmp_path):
    rc = main([
        "run", "--preset", "fig1", "--outdir", str(tmp_path),
        "--t-end", "3", "--samples", "61", "--methods", "exact",
    ])
    assert rc == 0
    pngs = sorted(p.name for p in tmp_path.glob("*.png"))
    assert pngs == ["fig1_delta.png", "fig1_entropy.png"]
    assert (tmp_path / "fig1_delta.png").stat().st_size > 1000


def test_run_config_file(tmp_path):
    cfg = tmp_path / "scenario.cfg"
    cfg.write_text(CONFIG)
    outdir = tmp_path / "out"
    assert main(["run", "--config", str(cfg), "--outdir", str(outdir), "--no-plot"]) == 0
    assert (outdir / "clidemo_combined.csv").exists()
    assert (outdir / "clidemo_master.csv").exists()


def test_unknown_preset_is_machine_readable_error(tmp_path, capsys):
    rc = main(["run", "--preset", "fig99", "--outdir", str(tmp_path), "--no-plot"])
    assert rc != 0
    err = capsys.readouterr().err
    assert err.startswith("error:")


def test_invalid_config_error(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("name = broken\n")
    rc = main(["run", "--config", str(cfg), "--outdir", str(tmp_path), "--no-plot"])
    assert rc != 0
    assert capsys.readouterr().err.startswith("error:")


def test_sweep(tmp_path):
    cfg = tmp_path / "scenario.cfg"
    cfg.write_text(CONFIG)
    outdir = tmp_path / "sweep"
    rc = main([
        "sweep", "--config", str(cfg), "--param", "lambda_over_omega0sq",
        "--values", "0.125,0.25", "--outdir", str(outdir), "--no-plot",
    ])
    assert rc == 0
    subdirs = sorted(p.name for p in outdir.iterdir())
    assert subdirs == [
        "clidemo_lambda_over_omega0sq=0.125",
        "clidemo_lambda_over_omega0sq=0.25",
    ]
    combined = outdir / subdirs[0] / "clidemo_lambda_over_omega0sq=0.125_combined.csv"
    assert combined.exists()


def test_sweep_unknown_param(tmp_path, capsys):
    cfg = tmp_path / "scenario.cfg"
    cfg.write_text(CONFIG)
    rc = main([
        "sweep", "--config", str(cfg), "--param", "coupling",
        "--values", "1", "--outdir", str(tmp_path), "--no-plot",
    ])
    assert rc != 0
    assert capsys.readouterr().err.startswith("error:")


def test_outdir_environment_fallback(tmp_path, monkeypatch):
    monkeypatch.setenv("DECOSIM_OUTDIR", str(tmp_path / "envout"))
    rc = main([
        "run", "--preset", "fig1", "--t-end", "2", "--samples", "41",
        "--methods", "exact", "--no-plot",
    ])
    assert rc == 0
    assert (tmp_path / "envout" / "fig1_combined.csv").exists()


def test_missing_outdir_is_error(tmp_path, monkeypatch, capsys):
    monkeypatch.delenv("DECOSIM_OUTDIR", raising=False)
    rc = main([
        "run", "--preset", "fig1", "--t-end", "2", "--samples", "41",
        "--methods", "exact", "--no-plot",
    ])
    assert rc != 0
    assert capsys.readouterr().err.startswith("error:")
