import numpy as np
import pytest

from spdcsim import dispersion, units


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture(scope="session")
def bbo():
    return dispersion.get_crystal("BBO")


@pytest.fixture(scope="session")
def lam_star(bbo):
    """Solved zero of the pump/pair group-velocity mismatch (um)."""
    return dispersion.find_symmetric_pump_wavelength(bbo)


def pump_from_bandwidth(lam_um, bw_nm):
    return dispersion.PumpSpec(lam_um, units.sigma_p_from_bandwidth(bw_nm, lam_um))


def pump_from_duration(lam_um, t_fs):
    return dispersion.PumpSpec(lam_um, units.sigma_p_from_duration(t_fs))


def pump_cw(lam_um):
    return dispersion.PumpSpec(lam_um, 0.0, cw_flag=True)
