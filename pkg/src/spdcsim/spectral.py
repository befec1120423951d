"""Frequency-domain engineering: joint spectra, filters, correlation
diagnostics, and the Fourier bridge back to the time domain.

The joint spectral amplitude of the two-photon state is

    f(omega_e, omega_o) = sinc(Delta L / 2) * E_p(omega_e + omega_o)

with sinc(x) = sin(x)/x, E_p(w) = exp{-(w - Omega_p)^2 / sigma_p^2}, and
Delta the phase mismatch k_p - k_o - k_e.  Axis convention throughout:
rows are the extraordinary frequency omega_e (the idler arm), columns the
ordinary frequency omega_o (the signal arm), both centered on the
degenerate frequency Omega_p/2.  The o-ray rides closer to the pump group
velocity, so its phase-matched range is the wider one — the joint-spectrum
asymmetry visible away from the symmetric pump point.  "exact" mode assembles Delta from the Sellmeier wavevectors at
the phase-matching angle; "linear" mode uses the first-order expansion

    Delta_lin = -D+ (nu_o + nu_e) - (D/2)(nu_o - nu_e)

in the detunings nu = omega - Omega_p/2, whose Fourier transform is the
closed-form time-domain wavefunction with support 0 < t- < DL.  The pump
ridge runs along omega_e + omega_o = Omega_p (anticorrelated); the sinc
ridge runs along Delta_lin = 0, which at D+ = 0 is the correlated diagonal
omega_e = omega_o.  The interplay of the two ridge widths — pump bandwidth
against crystal length — sets the sign of the frequency correlation and the
Schmidt number of the state.

time_domain_wavefunction inverts the JSA numerically.  It rebuilds the
amplitude on an internal rotated lattice (nu_sum = nu_e + nu_o conjugate to
t+, mu = (nu_e - nu_o)/2 conjugate to t-) so a single FFT lands directly on
a product (t+, t-) grid, attaches the support phase e^{i Delta L/2} that
puts the cw sheet at 0 < t- < DL (the stored JSA itself is kept real), and
normalizes the output so the ridge peak is 1, matching pi_wavefunction.
The mu window is oversampled and the t- rows decimated afterwards: kept
rows are exact, and the wide mu window integrates the slow sinc tails.  The
provided grid must hold the pump envelope below 1e-6 on its boundary
(WindowingError otherwise); the sinc direction decays only like 1/x, so its
boundary magnitude and truncated-energy estimate are reported in meta
rather than enforced.
"""

from dataclasses import dataclass, field

import numpy as np

from .dispersion import wavevector
from .errors import ConfigError, DomainError, WindowingError
from .temporal import TimeGrid
from .units import filter_domega, omega_to_wavelength, wavelength_to_omega

__all__ = [
    "FreqGrid",
    "FilterSpec",
    "SpectralDiagnostics",
    "pump_envelope",
    "phase_mismatch_exact",
    "phase_mismatch_linear",
    "default_freq_axes",
    "joint_spectral_amplitude",
    "joint_spectrum",
    "spectral_diagnostics",
    "time_domain_wavefunction",
    "filtered_pi_grid",
]

EDGE_TOL = 1e-6


def _check_axis(ax, name):
    ax = np.asarray(ax, dtype=float)
    if ax.ndim != 1 or ax.size < 2:
        raise ConfigError(f"{name} must be a 1-d axis with at least 2 samples")
    d = np.diff(ax)
    if not np.all(d > 0):
        raise ConfigError(f"{name} must be strictly increasing")
    if not np.allclose(d, d[0], rtol=1e-9, atol=0.0):
        raise ConfigError(f"{name} must be uniformly spaced")
    return ax


@dataclass
class FreqGrid:
    """Complex JSA on uniform (omega_e, omega_o) axes (rad/fs)."""

    omega_e_axis: np.ndarray
    omega_o_axis: np.ndarray
    values: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.omega_e_axis = _check_axis(self.omega_e_axis, "omega_e_axis")
        self.omega_o_axis = _check_axis(self.omega_o_axis, "omega_o_axis")
        self.values = np.asarray(self.values, dtype=np.complex128)
        if self.values.shape != (self.omega_e_axis.size, self.omega_o_axis.size):
            raise ConfigError(
                f"values shape {self.values.shape} does not match axes "
                f"({self.omega_e_axis.size}, {self.omega_o_axis.size})"
            )

    @property
    def d_omega_e(self):
        return self.omega_e_axis[1] - self.omega_e_axis[0]

    @property
    def d_omega_o(self):
        return self.omega_o_axis[1] - self.omega_o_axis[0]


@dataclass(frozen=True)
class FilterSpec:
    """Spectral filter: amplitude transmission applied to one or both arms.

    bandwidth is the intensity-FWHM in nm at the center wavelength; the
    gaussian amplitude is exp{-2 ln2 [(w - wc)/dw]^2} so |t|^2 has that
    FWHM.  Rectangular filters take the value 1/2 exactly at the edge.
    """

    shape: str = "gaussian"  # gaussian | rectangular | none
    center_wavelength: float = 0.8  # um
    bandwidth: float = 5.0  # nm, intensity FWHM
    applies_to: str = "both"  # signal | idler | both

    def __post_init__(self):
        if self.shape not in ("gaussian", "rectangular", "none"):
            raise ConfigError(f"unknown filter shape {self.shape!r}")
        if self.applies_to not in ("signal", "idler", "both"):
            raise ConfigError(f"filter applies_to must be signal/idler/both")
        if self.shape != "none" and not self.bandwidth > 0:
            raise ConfigError("filter bandwidth must be positive")

    @property
    def center_omega(self):
        return wavelength_to_omega(self.center_wavelength)

    @property
    def domega(self):
        """Intensity FWHM in rad/fs."""
        return filter_domega(self.bandwidth, self.center_wavelength)

    def amplitude(self, omega):
        omega = np.asarray(omega, dtype=float)
        if self.shape == "none":
            return np.ones_like(omega)
        delta = omega - self.center_omega
        if self.shape == "gaussian":
            return np.exp(-2.0 * np.log(2.0) * (delta / self.domega) ** 2)
        half = 0.5 * self.domega
        inside = np.abs(delta) < half
        edge = np.abs(delta) == half
        return inside * 1.0 + edge * 0.5


@dataclass
class SpectralDiagnostics:
    marginal_signal: np.ndarray
    marginal_idler: np.ndarray
    pearson_rho: float
    schmidt_number: float
    classification: str


def pump_envelope(omega_sum, pump):
    """Pump amplitude exp{-(w - Omega_p)^2/sigma_p^2}; cw -> indicator."""
    omega_sum = np.asarray(omega_sum, dtype=float)
    if pump.cw_flag:
        return (omega_sum == pump.omega_p) * 1.0
    return np.exp(-(((omega_sum - pump.omega_p) / pump.sigma_p) ** 2))


def phase_mismatch_exact(omega_e, omega_o, crystal, theta_pm):
    """Delta = k_p - k_o - k_e (rad/um) from the Sellmeier indices.

    The pump wave rides at omega_e + omega_o, extraordinary at theta_pm.
    Wavelengths outside the transparency window raise DomainError.
    """
    omega_e = np.asarray(omega_e, dtype=float)
    omega_o = np.asarray(omega_o, dtype=float)
    if np.any(omega_e <= 0) or np.any(omega_o <= 0):
        raise DomainError("frequencies must be positive")
    lam_e = omega_to_wavelength(omega_e)
    lam_o = omega_to_wavelength(omega_o)
    lam_p = omega_to_wavelength(omega_e + omega_o)
    kp = wavevector(crystal, lam_p, "e", theta_pm)
    ko = wavevector(crystal, lam_o, "o")
    ke = wavevector(crystal, lam_e, "e", theta_pm)
    return kp - ko - ke


def phase_mismatch_linear(nu_e, nu_o, disp):
    """First-order mismatch -D+ (nu_o + nu_e) - (D/2)(nu_o - nu_e)."""
    nu_e = np.asarray(nu_e, dtype=float)
    nu_o = np.asarray(nu_o, dtype=float)
    return -disp.d_plus * (nu_o + nu_e) - 0.5 * disp.d_big * (nu_o - nu_e)


def default_freq_axes(disp, pump, n=512, half_window=None):
    """Identical axes centered on Omega_p/2.

    The default half-window, 4 max(sigma_p, 2 pi 0.886/(|D| L)), covers both
    the pump ridge and the sinc main lobe (intensity FWHM 2 pi 0.886/(|D| L)
    in the difference frequency) in every regime.
    """
    if half_window is None:
        if disp.d_big == 0.0:
            raise DomainError("degenerate dispersion: D = 0")
        half_window = 4.0 * max(
            pump.sigma_p, 2.0 * np.pi * 0.886 / (abs(disp.d_big) * disp.length)
        )
    center = 0.5 * pump.omega_p
    ax = np.linspace(center - half_window, center + half_window, n)
    return ax, ax.copy()


def _apply_filters(f, omega_e, omega_o, filters):
    for filt in filters:
        if filt.applies_to in ("idler", "both"):
            f = f * filt.amplitude(omega_e)
        if filt.applies_to in ("signal", "both"):
            f = f * filt.amplitude(omega_o)
    return f


def joint_spectral_amplitude(
    omega_e_axis, omega_o_axis, crystal, pump, disp, mode="linear", filters=()
):
    """sinc(Delta L/2) E_p(sum) with optional filters, as a FreqGrid.

    The stored values are real (support phase belongs to the time-domain
    bridge); meta carries the generating configuration so downstream
    operations can rebuild mode-appropriate quantities.
    """
    we = _check_axis(omega_e_axis, "omega_e_axis")
    wo = _check_axis(omega_o_axis, "omega_o_axis")
    if mode not in ("linear", "exact"):
        raise ConfigError(f"mode must be 'linear' or 'exact', got {mode!r}")
    if pump.cw_flag:
        raise DomainError(
            "cw pump: the joint spectrum is a line (delta sheet) and cannot "
            "be represented on a finite grid; use the time-domain model"
        )
    WE = we[:, None]
    WO = wo[None, :]
    if mode == "exact":
        delta = phase_mismatch_exact(WE, WO, crystal, disp.theta_pm)
    else:
        half = 0.5 * pump.omega_p
        delta = phase_mismatch_linear(WE - half, WO - half, disp)
    x = 0.5 * delta * crystal.length
    f = np.sinc(x / np.pi) * pump_envelope(WE + WO, pump)
    f = _apply_filters(f, WE, WO, filters)
    meta = {
        "mode": mode,
        "crystal": crystal,
        "pump": pump,
        "disp": disp,
        "filters": tuple(filters),
    }
    return FreqGrid(we, wo, f.astype(np.complex128), meta)


def _weights(n):
    w = np.ones(n)
    w[0] = 0.5
    w[-1] = 0.5
    return w


def joint_spectrum(jsa, normalize=False):
    """S = |f|^2 as a real array; normalize divides by the 2-d quadrature."""
    S = np.abs(jsa.values) ** 2
    if normalize:
        W = _weights(S.shape[0])[:, None] * _weights(S.shape[1])[None, :]
        total = float(np.sum(W * S)) * jsa.d_omega_e * jsa.d_omega_o
        if total <= 0.0:
            raise DomainError("joint spectrum is identically zero")
        S = S / total
    return S


def spectral_diagnostics(jsa, thresholds=(-0.15, 0.15)):
    """Marginals, Pearson correlation, Schmidt number, classification.

    The correlation statistic treats the normalized S as a joint density
    over (omega_e, omega_o); the Schmidt number comes from the singular
    values of the amplitude array (K = 1 for any factorable f).
    Classification: anticorrelated for rho <= thresholds[0], correlated for
    rho >= thresholds[1], uncorrelated between.
    """
    if not np.any(jsa.values):
        raise DomainError("joint spectrum is identically zero")
    we = jsa.omega_e_axis
    wo = jsa.omega_o_axis
    S = np.abs(jsa.values) ** 2
    W = _weights(we.size)[:, None] * _weights(wo.size)[None, :]
    P = W * S
    total = float(np.sum(P))
    marg_e = np.sum(P, axis=1)
    marg_o = np.sum(P, axis=0)
    norm_e = float(np.sum(_weights(we.size) * marg_e)) * jsa.d_omega_e
    norm_o = float(np.sum(_weights(wo.size) * marg_o)) * jsa.d_omega_o
    marg_e = marg_e / norm_e
    marg_o = marg_o / norm_o

    mu_e = float(np.sum(P * we[:, None])) / total
    mu_o = float(np.sum(P * wo[None, :])) / total
    var_e = float(np.sum(P * (we[:, None] - mu_e) ** 2)) / total
    var_o = float(np.sum(P * (wo[None, :] - mu_o) ** 2)) / total
    if var_e <= 0.0 or var_o <= 0.0:
        raise DomainError("joint spectrum has no spread along an axis")
    cov = float(np.sum(P * (we[:, None] - mu_e) * (wo[None, :] - mu_o))) / total
    rho = cov / np.sqrt(var_e * var_o)

    s = np.linalg.svd(jsa.values, compute_uv=False)
    lam = s**2
    lam = lam / lam.sum()
    K = 1.0 / float(np.sum(lam**2))

    lo, hi = thresholds
    if rho <= lo:
        label = "anticorrelated"
    elif rho >= hi:
        label = "correlated"
    else:
        label = "uncorrelated"
    return SpectralDiagnostics(
        marginal_signal=marg_o,
        marginal_idler=marg_e,
        pearson_rho=float(rho),
        schmidt_number=K,
        classification=label,
    )


def _boundary_max(arr2d):
    return max(
        float(np.max(np.abs(arr2d[0, :]))),
        float(np.max(np.abs(arr2d[-1, :]))),
        float(np.max(np.abs(arr2d[:, 0]))),
        float(np.max(np.abs(arr2d[:, -1]))),
    )


def time_domain_wavefunction(
    jsa,
    n_out=512,
    oversample=4,
    t_minus_center=None,
    t_minus_span=None,
    n_t_plus=None,
):
    """Numeric two-photon wavefunction Pi(t+, t-) from a JSA grid.

    The default t- window spans three walk-off widths centered on DL/2 and
    the t+ window covers the tilted ridge plus five pulse durations; both
    are overridable (a symmetric t- window, center 0, gives the half-step
    lattice that scan_sampled needs).  Output is scaled to unit ridge peak
    and carries its Parseval energies, edge magnitudes, and sinc truncation
    estimate in meta.
    """
    meta_in = jsa.meta
    for key in ("disp", "pump", "crystal", "mode"):
        if key not in meta_in:
            raise ConfigError(
                "grid lacks its generating configuration; build it with "
                "joint_spectral_amplitude"
            )
    disp = meta_in["disp"]
    pump = meta_in["pump"]
    crystal = meta_in["crystal"]
    mode = meta_in["mode"]
    filters = meta_in.get("filters", ())
    if pump.cw_flag:
        raise DomainError(
            "cw pump: the joint spectrum is a line and has no finite-grid "
            "time-domain transform; use the analytic wavefunction"
        )
    if disp.d_big == 0.0:
        raise DomainError("degenerate dispersion: D = 0")

    we = jsa.omega_e_axis
    wo = jsa.omega_o_axis
    # The grid covers total detunings nu+ in [we[0]+wo[0], we[-1]+wo[-1]]
    # minus the pump carrier; the pump ridge must have died off by both ends
    # or the grid is cropping the state.  (The ridge itself always crosses
    # the square's anti-diagonal corners at full height — that is coverage,
    # not cropping, so only the extreme sums are tested.)
    nu_ends = np.array([we[0] + wo[0], we[-1] + wo[-1]])
    env_edge = float(np.max(pump_envelope(nu_ends, pump)))
    if env_edge >= EDGE_TOL:
        raise WindowingError(
            f"pump envelope reaches {env_edge:.3e} at the grid's total-"
            f"frequency extremes (tolerance {EDGE_TOL:g}); widen the window",
            edge_magnitude=env_edge,
        )
    edge_sinc = _boundary_max(jsa.values)

    sig = pump.sigma_p
    L = disp.length
    dl = disp.dl
    r = disp.tilt
    ov = int(oversample)
    if ov < 1:
        raise ConfigError("oversample must be >= 1")

    span = 3.0 * abs(dl) if t_minus_span is None else float(t_minus_span)
    center = 0.5 * dl if t_minus_center is None else float(t_minus_center)
    if span <= 0.0:
        raise ConfigError("t_minus_span must be positive")
    Nm = int(n_out) * ov
    dmu = 2.0 * np.pi / span
    dtm = span / Nm
    tm_c = center + 0.5 * dtm  # half-step keeps lattice off the box edges

    c0, c1 = sorted((0.0, -r * dl))
    pad = 10.0 / sig  # five 1/e half-durations of the t+ Gaussian
    t_plus_span = (c1 - c0) + 2.0 * pad
    Np = int(n_t_plus) if n_t_plus is not None else int(n_out)
    dnu = 2.0 * np.pi / t_plus_span
    tp_c = 0.5 * (c0 + c1)

    nu = (np.arange(Np) - Np // 2) * dnu  # nu_sum detuning
    mu = (np.arange(Nm) - Nm // 2) * dmu  # half-difference detuning
    NU = nu[:, None]
    MU = mu[None, :]
    om_e = 0.5 * pump.omega_p + 0.5 * NU + MU
    om_o = 0.5 * pump.omega_p + 0.5 * NU - MU
    if mode == "exact":
        delta = phase_mismatch_exact(om_e, om_o, crystal, disp.theta_pm)
    else:
        delta = -disp.d_plus * NU + disp.d_big * MU
    x = 0.5 * delta * L
    f = np.sinc(x / np.pi) * np.exp(1j * x) * np.exp(-((NU / sig) ** 2))
    f = _apply_filters(f, om_e, om_o, filters)

    phase = np.exp(-1j * (NU * tp_c + MU * tm_c))
    A = np.fft.fftshift(np.fft.fft2(np.fft.ifftshift(f * phase)))
    A *= dnu * dmu / (2.0 * np.pi) ** 2

    dtp = t_plus_span / Np
    tp_axis = (np.arange(Np) - Np // 2) * dtp + tp_c
    tm_fine = (np.arange(Nm) - Nm // 2) * dtm + tm_c

    peak = sig / (2.0 * np.sqrt(np.pi) * L * abs(disp.d_big))
    vals = (A / peak) * np.exp(-1j * pump.omega_p * tp_axis)[:, None]

    e_freq = float(np.sum(np.abs(f) ** 2)) * dnu * dmu / (
        (2.0 * np.pi) ** 2 * peak**2
    )
    e_time = float(np.sum(np.abs(vals) ** 2)) * dtp * dtm

    x_edge = 0.5 * abs(dl) * float(mu[-1])
    trunc = 2.0 / (np.pi * x_edge) if x_edge > 0 else np.inf

    out_meta = {
        "mode": mode,
        "edge_envelope": env_edge,
        "edge_sinc": edge_sinc,
        "truncation_estimate": trunc,
        "parseval_freq": e_freq,
        "parseval_time": e_time,
        "peak_scale": peak,
        "oversample": ov,
        "dt_minus_fine": dtm,
        "disp": disp,
        "pump": pump,
        "crystal": crystal,
        "filters": tuple(filters),
    }
    return TimeGrid(tp_axis, tm_fine[::ov], vals[:, ::ov], out_meta)


def filtered_pi_grid(
    crystal,
    pump,
    disp,
    filters,
    tau_max=0.0,
    n_freq=512,
    n_t_plus=512,
    n_t_minus=2048,
):
    """Filtered Pi on a mirror-symmetric t- lattice, ready for scan_sampled.

    The t- window covers every shifted support of a delay scan up to
    |tau| = tau_max plus the filters' impulse-response smearing (a gaussian
    amplitude filter of intensity FWHM dw rings over ~2.4/dw in time).
    """
    we, wo = default_freq_axes(disp, pump, n_freq)
    jsa = joint_spectral_amplitude(
        we, wo, crystal, pump, disp, mode="linear", filters=filters
    )
    smear = 0.0
    for filt in filters:
        if filt.shape != "none":
            smear = max(smear, 2.355 / filt.domega)
    span = 2.0 * (1.5 * abs(disp.dl) + 2.0 * abs(tau_max) + 5.0 * smear)
    return time_domain_wavefunction(
        jsa,
        n_out=n_t_minus,
        oversample=1,
        t_minus_center=0.0,
        t_minus_span=span,
        n_t_plus=n_t_plus,
    )
