import numpy as np
import pytest

from zetasums.datasets import cached_dataset
from zetasums.special import FunctionId
from zetasums.sumrules import sigma_series_derivative

XI_TMAX = 2520.0
T_TMAX = 1000.0
L4_TMAX = 1126.33


@pytest.fixture(scope="session")
def ds_xi():
    return cached_dataset(FunctionId.XI, XI_TMAX)


@pytest.fixture(scope="session")
def ds_tplus():
    return cached_dataset(FunctionId.T_PLUS, T_TMAX)


@pytest.fixture(scope="session")
def ds_tminus():
    return cached_dataset(FunctionId.T_MINUS, T_TMAX, include_real_axis=True)


@pytest.fixture(scope="session")
def ds_l4():
    return cached_dataset(FunctionId.L4_COMPLETED, L4_TMAX)


@pytest.fixture(scope="session")
def sig_der():
    """Derivative-route sigma series to order 52 for all four functions."""
    return {
        f: sigma_series_derivative(f, 52)
        for f in (
            FunctionId.XI,
            FunctionId.T_PLUS_TILDE,
            FunctionId.T_MINUS_TILDE,
            FunctionId.L4_COMPLETED,
        )
    }


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260826)
