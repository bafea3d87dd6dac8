"""Shared fixtures: figure presets and their Brown measure descriptors."""

import pytest

from freebrown.brown import brown_measure, control_cloud
from freebrown.models import get_preset, make_params


@pytest.fixture(scope="session")
def fig1_params():
    return get_preset("fig1")


@pytest.fixture(scope="session")
def fig2a_params():
    return get_preset("fig2a")


@pytest.fixture(scope="session")
def fig3a_params():
    return get_preset("fig3a")


@pytest.fixture(scope="session")
def square_params():
    """p and q both Bernoulli(1/2) on {0, 1}."""
    return make_params(0, 1, 0.5, 0, 1, 0.5)


@pytest.fixture(scope="session")
def fig1_desc(fig1_params):
    return brown_measure(fig1_params)


@pytest.fixture(scope="session")
def fig2a_desc(fig2a_params):
    return brown_measure(fig2a_params)


@pytest.fixture(scope="session")
def fig3a_desc(fig3a_params):
    return brown_measure(fig3a_params)


@pytest.fixture(scope="session")
def fig1_exact(fig1_desc):
    return control_cloud(fig1_desc, n=20_000, seed=11)


@pytest.fixture(scope="session")
def fig2a_exact(fig2a_desc):
    return control_cloud(fig2a_desc, n=100_000, seed=12)
