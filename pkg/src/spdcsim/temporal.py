"""Time-domain two-photon wavefunctions and quantum interference.

The two-photon wavefunction of collinear type-II SPDC, in mean/difference
detection-time coordinates t+ = (t1+t2)/2, t- = t1-t2, is

    Pi(t+, t-) = e^{-i Omega_p t+} exp{-sigma_p^2 [t+ + (D+/D) t-]^2 / 4}
                 for t- between 0 and D*L, and 0 otherwise.

D = 1/u_o - 1/u_e is the o/e group-velocity mismatch, D+ the pump-to-mean
mismatch, so the support is the e-o walk-off window and the Gaussian ridge is
tilted with slope -D+/D.  A cw pump (sigma_p = 0) turns the Gaussian factor
into 1: the rectangular sheet.

Two detection geometries build a two-photon amplitude out of Pi:

standard (polarization analyzers at a beamsplitter, e-o delay tau):

    A = cos(th1) sin(th2) Pi(t+, t- + tau) - sin(th1) cos(th2) Pi(t+, -t- + tau)

whose terms overlap only partially for a pulsed pump (the visibility loss of
ultrafast type-II SPDC), and

synthesizer (two-path interferometer that routes the e-ray always to one
detector and the o-ray to the other):

    A = cos(th1) cos(th2) Pi'(tau) + sin(th1) sin(th2) Pi'(-tau)
    Pi'(s) = [0 < t- < DL] e^{-i Omega_p (t+ + tau/2)}
             exp{-sigma_p^2 [(t+ + tau/2) + (D+/D)(t- + s)]^2 / 4}

where the delay re-clocks the pump Gaussian but the walk-off box stays put:
the two terms overlap completely at tau = 0 whatever the crystal, pump
bandwidth, or wavelength, and the delay scan follows

    R(tau) = 1/2 +/- 1/2 exp(-D+^2 sigma_p^2 tau^2 / (2 D^2))

with no dependence on L.  (Reading the delay as also sliding the box supports
would multiply the cross term by a (1 - 2|tau|/DL) box-slippage triangle;
the interferometer's delay sits before the polarization erasure, so only the
relative clocking matters, and the closed form above is the exact scan for
this model.)

Rates are normalized on a per-grid basis: R = quadrature(|A|^2) divided by
the quadrature of the undelayed |Pi|^2 on the same grid, which puts the
incoherent baseline at cos^2 th1 sin^2 th2 + sin^2 th1 cos^2 th2 (= 1/2 at
45/45) and cancels box-edge quadrature error exactly.

Partial overlap at tau != 0 produces a Werner state
rho = eps rho_ent + (1-eps) rho_mix with eps the normalized overlap of the
two synthesizer terms; werner_epsilon computes it from the same quadratures.
"""

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import ConfigError, DomainError

__all__ = [
    "TimeGrid",
    "AnalyzerSettings",
    "InterferencePattern",
    "WernerDiagnostic",
    "support",
    "pi_wavefunction",
    "default_time_axes",
    "amplitude_standard",
    "amplitude_synthesizer",
    "coincidence_rate",
    "interference_scan",
    "scan_sampled",
    "visibility",
    "synthesizer_rate_closed_form",
    "werner_epsilon",
    "werner_epsilon_closed_form",
    "werner_scan",
    "t_minus_width",
]


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
class TimeGrid:
    """Complex amplitude sampled on uniform (t+, t-) axes (fs)."""

    t_plus_axis: np.ndarray
    t_minus_axis: np.ndarray
    values: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.t_plus_axis = _check_axis(self.t_plus_axis, "t_plus_axis")
        self.t_minus_axis = _check_axis(self.t_minus_axis, "t_minus_axis")
        self.values = np.asarray(self.values)
        if self.values.shape != (self.t_plus_axis.size, self.t_minus_axis.size):
            raise ConfigError(
                f"values shape {self.values.shape} does not match axes "
                f"({self.t_plus_axis.size}, {self.t_minus_axis.size})"
            )

    @property
    def dt_plus(self):
        return self.t_plus_axis[1] - self.t_plus_axis[0]

    @property
    def dt_minus(self):
        return self.t_minus_axis[1] - self.t_minus_axis[0]


@dataclass(frozen=True)
class AnalyzerSettings:
    """Polarization-analyzer angles (rad) and the e-o delay tau (fs)."""

    theta1: float
    theta2: float
    tau: float = 0.0


@dataclass
class InterferencePattern:
    taus: np.ndarray
    rates: np.ndarray
    visibility: float
    meta: dict = field(default_factory=dict)


@dataclass(frozen=True)
class WernerDiagnostic:
    epsilon: float
    tau: float


def support(disp):
    """Open t- support of Pi: the interval between 0 and D*L, as (lo, hi)."""
    if disp.d_big == 0.0:
        raise DomainError(
            "degenerate dispersion: D = 0 collapses the two-photon "
            "wavefunction support"
        )
    return (min(0.0, disp.dl), max(0.0, disp.dl))


def _weights(n):
    w = np.ones(n)
    w[0] = 0.5
    w[-1] = 0.5
    return w


def _quad2d(arr, tp, tm):
    """Trapezoid quadrature matching the kernel reductions."""
    W = _weights(tp.size)[:, None] * _weights(tm.size)[None, :]
    return float(np.sum(W * arr)) * (tp[1] - tp[0]) * (tm[1] - tm[0])


def pi_wavefunction(t_plus, t_minus, disp, pump):
    """Pi(t+, t-) evaluated elementwise (arrays broadcast).

    For a grid pass t_plus[:, None], t_minus[None, :].  Exactly 0 outside the
    open support; |Pi| = 1 on the tilted ridge t+ = -(D+/D) t-.
    """
    lo, hi = support(disp)
    tp = np.asarray(t_plus, dtype=float)
    tm = np.asarray(t_minus, dtype=float)
    box = (tm > lo) & (tm < hi)
    carrier = np.exp(-1j * pump.omega_p * tp)
    if pump.cw_flag:
        env = np.ones(np.broadcast_shapes(tp.shape, tm.shape))
    else:
        s2 = pump.sigma_p**2
        env = np.exp(-0.25 * s2 * (tp + disp.tilt * tm) ** 2)
    return box * env * carrier


def default_time_axes(disp, pump, tau_max=0.0, n=1024):
    """Grid covering every shifted support of a scan up to |tau| = tau_max.

    t- spans +/-(1.5|DL| + 2 tau_max); t+ covers the tilted ridge plus five
    pulse durations on each side (cw: a fixed +/-2000 fs window, which the
    rate normalization cancels).
    """
    lo, hi = support(disp)
    tau_max = abs(tau_max)
    wm = 1.5 * abs(disp.dl) + 2.0 * tau_max
    tm = np.linspace(-wm, wm, n)
    if pump.cw_flag:
        tp = np.linspace(-2000.0, 2000.0, n)
    else:
        r = disp.tilt
        c0, c1 = sorted((-r * lo, -r * hi))
        pad = 10.0 / pump.sigma_p + tau_max * (0.5 + abs(r))
        tp = np.linspace(c0 - pad, c1 + pad, n)
    return tp, tm


def _coverage_warning(tp, tm, disp, pump, tau, setup):
    lo, hi = support(disp)
    at = abs(tau)
    if setup == "standard":
        need_lo, need_hi = min(lo, -hi) - at, max(hi, -lo) + at
    else:
        need_lo, need_hi = lo, hi
    msgs = []
    if tm[0] > need_lo or tm[-1] < need_hi:
        msgs.append(
            f"t- axis [{tm[0]:g}, {tm[-1]:g}] does not cover the shifted "
            f"supports [{need_lo:g}, {need_hi:g}]"
        )
    if not pump.cw_flag:
        r = disp.tilt
        c0, c1 = sorted((-r * lo, -r * hi))
        margin = 6.0 / pump.sigma_p + (at / 2 if setup == "synthesizer" else 0.0)
        if tp[0] > c0 - margin or tp[-1] < c1 + margin:
            msgs.append(
                f"t+ axis [{tp[0]:g}, {tp[-1]:g}] clips the tilted ridge "
                f"[{c0 - margin:g}, {c1 + margin:g}]"
            )
    return "; ".join(msgs) if msgs else None


def amplitude_standard(t_plus_axis, t_minus_axis, disp, pump, analyzers):
    """Two-term analyzer amplitude on the given axes (complex TimeGrid).

    meta carries the same-grid reference energy used by coincidence_rate and
    a coverage warning when the axes clip a shifted support.
    """
    tp = _check_axis(t_plus_axis, "t_plus_axis")
    tm = _check_axis(t_minus_axis, "t_minus_axis")
    th1, th2, tau = analyzers.theta1, analyzers.theta2, analyzers.tau
    w1 = np.cos(th1) * np.sin(th2)
    w2 = np.sin(th1) * np.cos(th2)
    TP = tp[:, None]
    TM = tm[None, :]
    vals = w1 * pi_wavefunction(TP, TM + tau, disp, pump) - w2 * pi_wavefunction(
        TP, -TM + tau, disp, pump
    )
    ref = pi_wavefunction(TP, TM, disp, pump)
    meta = {
        "setup": "standard",
        "theta1": th1,
        "theta2": th2,
        "tau": tau,
        "weights": (w1, w2),
        "reference_energy": _quad2d(np.abs(ref) ** 2, tp, tm),
    }
    warn = _coverage_warning(tp, tm, disp, pump, tau, "standard")
    if warn:
        meta["coverage_warning"] = warn
    return TimeGrid(tp, tm, vals, meta)


def amplitude_synthesizer(t_plus_axis, t_minus_axis, disp, pump, analyzers):
    """Interferometric amplitude: common box, delay in the pump clock."""
    tp = _check_axis(t_plus_axis, "t_plus_axis")
    tm = _check_axis(t_minus_axis, "t_minus_axis")
    th1, th2, tau = analyzers.theta1, analyzers.theta2, analyzers.tau
    w1 = np.cos(th1) * np.cos(th2)
    w2 = np.sin(th1) * np.sin(th2)
    lo, hi = support(disp)
    T = tp[:, None] + 0.5 * tau
    box = ((tm > lo) & (tm < hi))[None, :]
    if pump.cw_flag:
        env1 = env2 = envr = np.ones((tp.size, tm.size))
    else:
        q = 0.25 * pump.sigma_p**2
        r = disp.tilt
        env1 = np.exp(-q * (T + r * (tm + tau)[None, :]) ** 2)
        env2 = np.exp(-q * (T + r * (tm - tau)[None, :]) ** 2)
        envr = np.exp(-q * (T + r * tm[None, :]) ** 2)
    carrier = np.exp(-1j * pump.omega_p * T)
    vals = carrier * box * (w1 * env1 + w2 * env2)
    meta = {
        "setup": "synthesizer",
        "theta1": th1,
        "theta2": th2,
        "tau": tau,
        "weights": (w1, w2),
        "reference_energy": _quad2d(box * envr * envr, tp, tm),
    }
    warn = _coverage_warning(tp, tm, disp, pump, tau, "synthesizer")
    if warn:
        meta["coverage_warning"] = warn
    return TimeGrid(tp, tm, vals, meta)


def coincidence_rate(grid):
    """Normalized coincidence rate: quadrature of |A|^2 over the grid.

    Divides by the grid's reference energy (meta) when present, so the
    incoherent 45/45 baseline sits at 1/2; without one, returns the raw
    quadrature.
    """
    raw = _quad2d(np.abs(grid.values) ** 2, grid.t_plus_axis, grid.t_minus_axis)
    ref = grid.meta.get("reference_energy")
    if ref is None:
        return raw
    if ref <= 0.0:
        raise DomainError("reference energy is zero: grid misses the support")
    return raw / ref


def _rates_from_terms(setup, th1, th2, E1, E2, X, Er):
    if setup == "standard":
        w1 = np.cos(th1) * np.sin(th2)
        w2 = np.sin(th1) * np.cos(th2)
        num = w1 * w1 * E1 + w2 * w2 * E2 - 2.0 * w1 * w2 * X
    elif setup == "synthesizer":
        w1 = np.cos(th1) * np.cos(th2)
        w2 = np.sin(th1) * np.sin(th2)
        num = w1 * w1 * E1 + w2 * w2 * E2 + 2.0 * w1 * w2 * X
    else:
        raise ConfigError(f"setup must be 'standard' or 'synthesizer', got {setup!r}")
    if Er <= 0.0:
        raise DomainError("reference energy is zero: grid misses the support")
    return num / Er


def interference_scan(
    taus, disp, pump, theta1, theta2, setup="synthesizer", n=1024
):
    """Delay scan of the normalized coincidence rate.

    One fixed grid sized for the largest |tau| serves the whole scan (the
    reference energy is re-reduced on it for every delay, so the ratio stays
    quadrature-exact).
    """
    taus = np.atleast_1d(np.asarray(taus, dtype=float))
    if taus.size == 0:
        raise ConfigError("empty delay scan")
    tp, tm = default_time_axes(disp, pump, np.max(np.abs(taus)), n)
    lo, hi = support(disp)
    sig = 0.0 if pump.cw_flag else pump.sigma_p
    r = disp.tilt
    kernel = (
        kernels.rate_terms_standard
        if setup == "standard"
        else kernels.rate_terms_synthesizer
    )
    if setup not in ("standard", "synthesizer"):
        raise ConfigError(f"setup must be 'standard' or 'synthesizer', got {setup!r}")
    rates = np.empty_like(taus)
    for i, tau in enumerate(taus):
        E1, E2, X, Er = kernel(tp, tm, sig, r, lo, hi, tau)
        rates[i] = _rates_from_terms(setup, theta1, theta2, E1, E2, X, Er)
    pattern = InterferencePattern(
        taus=taus,
        rates=rates,
        visibility=_vis(rates),
        meta={
            "setup": setup,
            "theta1": theta1,
            "theta2": theta2,
            "n": n,
            "t_plus_span": (float(tp[0]), float(tp[-1])),
            "t_minus_span": (float(tm[0]), float(tm[-1])),
            "backend": kernels.backend_name(),
        },
    )
    return pattern


def scan_sampled(grid, taus, theta1, theta2):
    """Standard-setup delay scan on a sampled Pi grid (e.g. a filtered
    wavefunction from the spectral bridge).

    Requires a t- axis mirror-symmetric about 0 on a half-step lattice so
    t- -> -t- is an exact index reversal; delays are snapped to the grid
    step (recorded in meta).
    """
    tp, tm = grid.t_plus_axis, grid.t_minus_axis
    if not np.allclose(tm + tm[::-1], 0.0, atol=1e-9 * max(1.0, abs(tm[-1]))):
        raise ConfigError("scan_sampled needs a t- axis symmetric about 0")
    vals = grid.values
    dtm = grid.dt_minus
    w1 = np.cos(theta1) * np.sin(theta2)
    w2 = np.sin(theta1) * np.cos(theta2)
    Er = _quad2d(np.abs(vals) ** 2, tp, tm)
    if Er <= 0.0:
        raise DomainError("sampled grid carries no energy")
    taus = np.atleast_1d(np.asarray(taus, dtype=float))
    M = tm.size
    rates = np.empty_like(taus)
    snapped = np.empty_like(taus)
    for idx, tau in enumerate(taus):
        k = int(round(tau / dtm))
        snapped[idx] = k * dtm
        term1 = np.zeros_like(vals)
        if k >= 0:
            if k < M:
                term1[:, : M - k] = vals[:, k:]
        else:
            if -k < M:
                term1[:, -k:] = vals[:, :k]
        term2 = term1[:, ::-1]
        A = w1 * term1 - w2 * term2
        rates[idx] = _quad2d(np.abs(A) ** 2, tp, tm) / Er
    return InterferencePattern(
        taus=taus,
        rates=rates,
        visibility=_vis(rates),
        meta={
            "setup": "standard-sampled",
            "theta1": theta1,
            "theta2": theta2,
            "taus_snapped": snapped,
            "dt_minus": float(dtm),
        },
    )


def _vis(rates):
    hi = float(np.max(rates))
    lo = float(np.min(rates))
    if hi + lo == 0.0:
        return 0.0
    return (hi - lo) / (hi + lo)


def visibility(pattern):
    """(max - min)/(max + min) over the scan; 0 for a constant pattern."""
    return _vis(pattern.rates)


def synthesizer_rate_closed_form(disp, pump, tau, branch="peak"):
    """1/2 +/- 1/2 exp(-D+^2 sigma_p^2 tau^2 / (2 D^2))."""
    sig = 0.0 if pump.cw_flag else pump.sigma_p
    g = np.exp(-((disp.d_plus * sig * np.asarray(tau, dtype=float)) ** 2) / (2.0 * disp.d_big**2))
    if branch == "peak":
        return 0.5 + 0.5 * g
    if branch == "dip":
        return 0.5 - 0.5 * g
    raise ConfigError(f"branch must be 'peak' or 'dip', got {branch!r}")


def werner_epsilon_closed_form(disp, pump, tau):
    sig = 0.0 if pump.cw_flag else pump.sigma_p
    return np.exp(
        -((disp.d_plus * sig * np.asarray(tau, dtype=float)) ** 2) / (2.0 * disp.d_big**2)
    )


def werner_epsilon(disp, pump, tau, n=1024):
    """Overlap fraction of the two synthesizer terms at delay tau.

    eps = quad(g1 g2) / (quad(g1^2)/2 + quad(g2^2)/2) over the common box;
    at tau = 0 the three quadratures are the same float, so eps is exactly 1.
    """
    tp, tm = default_time_axes(disp, pump, abs(tau), n)
    lo, hi = support(disp)
    sig = 0.0 if pump.cw_flag else pump.sigma_p
    E1, E2, X, _ = kernels.rate_terms_synthesizer(
        tp, tm, sig, disp.tilt, lo, hi, float(tau)
    )
    if E1 + E2 <= 0.0:
        raise DomainError("grid misses the wavefunction support")
    return WernerDiagnostic(epsilon=X / (0.5 * (E1 + E2)), tau=float(tau))


def werner_scan(taus, disp, pump, n=1024):
    """werner_epsilon over a delay list, on one common grid."""
    taus = np.atleast_1d(np.asarray(taus, dtype=float))
    tp, tm = default_time_axes(disp, pump, np.max(np.abs(taus)), n)
    lo, hi = support(disp)
    sig = 0.0 if pump.cw_flag else pump.sigma_p
    eps = np.empty_like(taus)
    for i, tau in enumerate(taus):
        E1, E2, X, _ = kernels.rate_terms_synthesizer(
            tp, tm, sig, disp.tilt, lo, hi, tau
        )
        eps[i] = X / (0.5 * (E1 + E2))
    return eps


def t_minus_width(grid):
    """Intensity-weighted standard deviation of the t- marginal (fs)."""
    tm = grid.t_minus_axis
    w = _weights(grid.t_plus_axis.size)
    marg = np.sum(w[:, None] * np.abs(grid.values) ** 2, axis=0)
    total = float(np.sum(marg))
    if total <= 0.0:
        raise DomainError("grid carries no energy")
    mu = float(np.sum(marg * tm)) / total
    return float(np.sqrt(np.sum(marg * (tm - mu) ** 2) / total))
