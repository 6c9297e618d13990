"""Shared fixtures: preset runs are expensive, so cache them per session."""

import pytest

from decosim import preset, run_scenario


@pytest.fixture(scope="session")
def preset_runs():
    """Memoizing accessor for full preset runs."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = run_scenario(preset(name))
        return cache[name]

    return get
