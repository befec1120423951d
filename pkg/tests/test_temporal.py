"""Time-domain two-photon wavefunction, analyzer rates, and delay scans."""

import numpy as np
import pytest

from conftest import pump_cw, pump_from_bandwidth, pump_from_duration
from spdcsim import dispersion, temporal, units
from spdcsim.errors import ConfigError, DomainError
from spdcsim.temporal import AnalyzerSettings


@pytest.fixture(scope="module")
def disp2(bbo_mod):
    return dispersion.dispersion_params(
        bbo_mod.with_length(2e3), pump_from_bandwidth(0.4, 2.0)
    )


@pytest.fixture(scope="module")
def bbo_mod():
    return dispersion.get_crystal("BBO")


@pytest.fixture(scope="module")
def pump2():
    return pump_from_bandwidth(0.4, 2.0)


# ----------------------------------------------------------- wavefunction


def test_support_is_signed_walkoff_interval(disp2):
    lo, hi = temporal.support(disp2)
    assert lo == 0.0
    assert hi == pytest.approx(disp2.dl, rel=1e-14)


def test_support_flips_with_walkoff_sign(disp2):
    import dataclasses

    flipped = dataclasses.replace(disp2, d_big=-disp2.d_big, dl=-disp2.dl)
    lo, hi = temporal.support(flipped)
    assert (lo, hi) == (pytest.approx(-disp2.dl), 0.0)
    degenerate = dataclasses.replace(disp2, d_big=0.0, dl=0.0)
    with pytest.raises(DomainError):
        temporal.support(degenerate)


def test_wavefunction_vanishes_outside_support(disp2, pump2):
    tm = np.array([-50.0, -1e-9, disp2.dl + 1e-9, disp2.dl + 200.0])
    vals = temporal.pi_wavefunction(0.0, tm, disp2, pump2)
    assert np.all(vals == 0.0)


def test_wavefunction_magnitude_is_tilted_gaussian(disp2, pump2):
    tp = np.linspace(-400, 400, 7)[:, None]
    tm = np.linspace(10, 370, 5)[None, :]
    vals = temporal.pi_wavefunction(tp, tm, disp2, pump2)
    sig, r = pump2.sigma_p, disp2.tilt
    expect = np.exp(-(sig**2) * (tp + r * tm) ** 2 / 4.0)
    assert np.abs(vals) == pytest.approx(expect, abs=1e-14)


def test_wavefunction_carrier_oscillates_at_pump_frequency(disp2, pump2):
    tp = np.array([0.0, 1.0])
    val0, val1 = temporal.pi_wavefunction(tp, 50.0, disp2, pump2)
    got = np.angle(val1 / val0)
    expect = np.angle(np.exp(-1j * pump2.omega_p))
    assert got == pytest.approx(expect, abs=1e-10)


def test_cw_wavefunction_is_flat_sheet(disp2):
    pump = pump_cw(0.4)
    tp = np.linspace(-3000, 3000, 11)[:, None]
    tm = np.linspace(5, 380, 9)[None, :]
    vals = temporal.pi_wavefunction(tp, tm, disp2, pump)
    assert np.abs(vals) == pytest.approx(np.ones((11, 9)), abs=1e-14)


def test_ridge_sits_at_minus_tilt_times_difference(disp2, pump2):
    tm = 200.0
    tp = np.linspace(-300, 300, 6001)
    vals = np.abs(temporal.pi_wavefunction(tp, tm, disp2, pump2))
    assert tp[np.argmax(vals)] == pytest.approx(-disp2.tilt * tm, abs=0.2)


def test_default_axes_cover_support(disp2, pump2):
    tp, tm = temporal.default_time_axes(disp2, pump2, tau_max=100.0, n=256)
    lo, hi = temporal.support(disp2)
    assert tm[0] < min(lo, -hi) - 100.0 and tm[-1] > max(hi, -lo) + 100.0
    grid = temporal.amplitude_standard(
        tp, tm, disp2, pump2, AnalyzerSettings(np.pi / 4, np.pi / 4, 50.0)
    )
    assert "coverage_warning" not in grid.meta


def test_clipped_axes_carry_a_coverage_warning(disp2, pump2):
    tp = np.linspace(-50, 50, 64)
    tm = np.linspace(-30, 30, 64)
    grid = temporal.amplitude_standard(
        tp, tm, disp2, pump2, AnalyzerSettings(np.pi / 4, np.pi / 4, 0.0)
    )
    assert "coverage_warning" in grid.meta


def test_axes_must_be_uniform_and_increasing(disp2, pump2):
    with pytest.raises(ConfigError):
        temporal.amplitude_standard(
            np.array([0.0, 1.0, 3.0]),
            np.linspace(-1, 1, 8),
            disp2,
            pump2,
            AnalyzerSettings(0.0, 0.0),
        )


# ------------------------------------------------------------ rates/scans


def test_cw_standard_half_walkoff_delay_interferes_perfectly(bbo_mod):
    pump = pump_cw(0.4)
    disp = dispersion.dispersion_params(bbo_mod.with_length(2e3), pump)
    taus = np.linspace(0.0, disp.dl, 41)
    pat = temporal.interference_scan(
        taus, disp, pump, np.pi / 4, np.pi / 4, "standard", n=512
    )
    assert pat.rates[20] == pytest.approx(0.0, abs=1e-12)  # tau = DL/2
    assert pat.visibility == pytest.approx(1.0, abs=1e-3)


def test_synthesizer_scan_matches_closed_form(bbo_mod):
    pump = pump_from_bandwidth(0.4, 2.0)
    disp = dispersion.dispersion_params(bbo_mod.with_length(3e3), pump)
    taus = np.linspace(-300, 300, 21)
    for th2, branch in ((np.pi / 4, "peak"), (-np.pi / 4, "dip")):
        pat = temporal.interference_scan(
            taus, disp, pump, np.pi / 4, th2, "synthesizer", n=512
        )
        closed = temporal.synthesizer_rate_closed_form(disp, pump, taus, branch)
        assert np.max(np.abs(pat.rates - closed)) < 1e-6


def test_synthesizer_zero_delay_rates_are_exact(disp2, pump2):
    pk = temporal.interference_scan(
        [0.0], disp2, pump2, np.pi / 4, np.pi / 4, "synthesizer", n=128
    )
    dp = temporal.interference_scan(
        [0.0], disp2, pump2, np.pi / 4, -np.pi / 4, "synthesizer", n=128
    )
    assert pk.rates[0] == 1.0
    assert dp.rates[0] == 0.0


def test_rates_stay_in_unit_interval(bbo_mod, rng):
    for _ in range(6):
        L = rng.uniform(0.5e3, 6e3)
        lam = rng.uniform(0.4, 0.7)
        bw = rng.uniform(1.0, 10.0)
        pump = pump_from_bandwidth(lam, bw)
        disp = dispersion.dispersion_params(bbo_mod.with_length(L), pump)
        taus = rng.uniform(-400, 400, size=5)
        for setup in ("standard", "synthesizer"):
            th1, th2 = rng.uniform(0, np.pi / 2, size=2)
            pat = temporal.interference_scan(
                taus, disp, pump, th1, th2, setup, n=128
            )
            assert np.all(pat.rates >= 0.0)
            assert np.all(pat.rates <= 1.0 + 1e-12)


def test_standard_scan_dips_at_walkoff_overlap(disp2, pump2):
    # pulsed: partial dip; the minimum sits near tau = DL/2
    taus = np.linspace(0.0, 400.0, 41)
    pat = temporal.interference_scan(
        taus, disp2, pump2, np.pi / 4, np.pi / 4, "standard", n=512
    )
    assert 0.0 < pat.visibility < 1.0
    assert taus[np.argmin(pat.rates)] == pytest.approx(disp2.dl / 2, abs=20.0)


def test_visibility_of_constant_scan_is_zero():
    pat = temporal.InterferencePattern(
        taus=np.array([0.0, 1.0]), rates=np.array([0.5, 0.5]), visibility=0.0, meta={}
    )
    assert temporal.visibility(pat) == 0.0


def test_bad_setup_rejected(disp2, pump2):
    with pytest.raises(ConfigError):
        temporal.interference_scan([0.0], disp2, pump2, 0.1, 0.1, "hybrid")


# -------------------------------------------------------- sampled scans


def test_sampled_scan_reproduces_analytic_standard_scan(bbo_mod):
    from spdcsim import spectral

    pump = pump_from_duration(0.4, 100.0)
    disp = dispersion.dispersion_params(bbo_mod.with_length(2e3), pump)
    grid = spectral.filtered_pi_grid(
        bbo_mod.with_length(2e3), pump, disp, (), tau_max=400.0
    )
    taus = np.linspace(0.0, 400.0, 11)
    sampled = temporal.scan_sampled(grid, taus, np.pi / 4, np.pi / 4)
    direct = temporal.interference_scan(
        sampled.meta["taus_snapped"], disp, pump, np.pi / 4, np.pi / 4, "standard", n=1024
    )
    assert np.max(np.abs(sampled.rates - direct.rates)) < 5e-3
    assert np.max(np.abs(sampled.meta["taus_snapped"] - taus)) <= grid.dt_minus / 2


def test_sampled_scan_requires_symmetric_axis(disp2, pump2):
    tp = np.linspace(-500, 500, 32)
    tm = np.linspace(-100, 500, 64)  # not symmetric about 0
    vals = temporal.pi_wavefunction(tp[:, None], tm[None, :], disp2, pump2)
    grid = temporal.TimeGrid(tp, tm, vals, {})
    with pytest.raises(ConfigError):
        temporal.scan_sampled(grid, [0.0], np.pi / 4, np.pi / 4)


# ---------------------------------------------------------- werner decay


def test_werner_overlap_is_unity_at_zero_delay(disp2, pump2):
    diag = temporal.werner_epsilon(disp2, pump2, 0.0, n=256)
    assert diag.epsilon == 1.0


def test_werner_overlap_matches_closed_form(bbo_mod):
    pump = pump_from_bandwidth(0.4, 2.0)
    disp = dispersion.dispersion_params(bbo_mod.with_length(3e3), pump)
    for tau in (30.0, 120.0, 250.0):
        got = temporal.werner_epsilon(disp, pump, tau, n=512).epsilon
        expect = temporal.werner_epsilon_closed_form(disp, pump, tau)
        assert got == pytest.approx(expect, abs=1e-9)


def test_werner_overlap_decays_with_delay(disp2, pump2):
    eps = [
        temporal.werner_epsilon(disp2, pump2, t, n=256).epsilon
        for t in (0.0, 80.0, 160.0, 320.0)
    ]
    assert all(a > b for a, b in zip(eps, eps[1:]))
    assert all(0.0 <= e <= 1.0 for e in eps)


def test_werner_scan_matches_pointwise_calls(disp2, pump2):
    taus = np.array([0.0, 50.0, 150.0])
    scan = temporal.werner_scan(taus, disp2, pump2, n=256)
    assert scan[0] == 1.0
    point = temporal.werner_epsilon(disp2, pump2, 150.0, n=256).epsilon
    assert scan[2] == pytest.approx(point, abs=1e-6)
