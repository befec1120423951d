"""Crystal dispersion: Sellmeier indices, phase matching, walk-off parameters.

All Sellmeier sets use the four-coefficient form

    n^2(lam) = a + b/(lam^2 - c) + d*lam^2        (lam in um)

The built-in "BBO" material ships the standard published set (Kato 1986),
transparency window 0.2-3.0 um.  User-defined materials supply their own
(a, b, c, d) pairs through the same form.

The e-ray index at propagation angle theta to the optic axis follows the
index ellipsoid,

    1/n_th^2 = cos^2(theta)/n_o^2 + sin^2(theta)/n_e^2,

and group velocities come from the analytic derivative of the Sellmeier form:
N = n - lam*dn/dlam is the group index and 1/u = N/C is in fs/um.

Phase matching is collinear degenerate type-II: an e-polarized pump at lam_p
propagating at theta to the optic axis splits into an o-polarized signal and
an e-polarized idler, both at 2*lam_p,

    delta(theta) = k_e(lam_p, theta) - k_o(2 lam_p) - k_e(2 lam_p, theta) = 0,

solved for theta by bisection.  The two-photon walk-off parameters are

    D+ = (1/u_o + 1/u_e)/2 - 1/u_p        D = 1/u_o - 1/u_e

with signal/idler inverse group velocities at the degenerate wavelength and
the pump's at lam_p (e-ray at the solved theta).  For BBO, D+ crosses zero
near lam_p = 757 nm; find_symmetric_pump_wavelength brackets that root.
"""

from dataclasses import dataclass, replace

import numpy as np

from .errors import ConfigError, DomainError
from .units import C


@dataclass(frozen=True)
class Sellmeier:
    """n^2 = a + b/(lam^2 - c) + d*lam^2, lam in um."""

    a: float
    b: float
    c: float
    d: float

    def n2(self, lam):
        lam2 = np.square(lam)
        return self.a + self.b / (lam2 - self.c) + self.d * lam2

    def n(self, lam):
        return np.sqrt(self.n2(lam))

    def dn_dlam(self, lam):
        # d(n^2)/dlam = -2 b lam/(lam^2-c)^2 + 2 d lam, so
        # dn/dlam = lam*(d - b/(lam^2-c)^2)/n
        lam2 = np.square(lam)
        return lam * (self.d - self.b / (lam2 - self.c) ** 2) / self.n(lam)


@dataclass(frozen=True)
class CrystalSpec:
    name: str
    sellmeier_o: Sellmeier
    sellmeier_e: Sellmeier
    length: float  # um
    window: tuple = (0.2, 3.0)  # transparency, um
    cut_angle: float = None  # rad; None until solved

    def __post_init__(self):
        if not self.length > 0:
            raise ConfigError(f"crystal length must be positive, got {self.length}")
        if self.cut_angle is not None and not 0.0 < self.cut_angle < np.pi / 2:
            raise ConfigError(
                f"cut angle must lie in (0, pi/2), got {self.cut_angle}"
            )

    def with_length(self, length):
        return replace(self, length=length)

    def with_cut_angle(self, theta):
        return replace(self, cut_angle=theta)


@dataclass(frozen=True)
class PumpSpec:
    center_wavelength: float  # um
    bandwidth_sigma: float = 0.0  # sigma_p, rad/fs; 0 with cw_flag set -> cw
    cw_flag: bool = False

    def __post_init__(self):
        if self.bandwidth_sigma < 0:
            raise ConfigError("pump bandwidth_sigma must be >= 0")
        if self.cw_flag and self.bandwidth_sigma != 0.0:
            object.__setattr__(self, "bandwidth_sigma", 0.0)
        if not self.cw_flag and self.bandwidth_sigma == 0.0:
            object.__setattr__(self, "cw_flag", True)

    @property
    def omega_p(self):
        return 2.0 * np.pi * C / self.center_wavelength

    @property
    def sigma_p(self):
        return self.bandwidth_sigma


@dataclass(frozen=True)
class DispersionSummary:
    """Walk-off parameters at the collinear degenerate phase-matching point.

    inv_u_* are inverse group velocities in fs/um; d_plus and d_big are the
    D+ and D combinations above; dl = d_big*L is the signed temporal walk-off
    across the crystal in fs.
    """

    inv_u_o: float
    inv_u_e: float
    inv_u_p: float
    d_plus: float
    d_big: float
    dl: float
    theta_pm: float
    length: float
    pump_wavelength: float

    @property
    def tilt(self):
        """Ridge slope r = D+/D of the two-photon wavefunction."""
        return self.d_plus / self.d_big


BBO = CrystalSpec(
    name="BBO",
    sellmeier_o=Sellmeier(2.7359, 0.01878, 0.01822, -0.01354),
    sellmeier_e=Sellmeier(2.3753, 0.01224, 0.01667, -0.01516),
    length=2000.0,
)

_REGISTRY = {"BBO": BBO}


def get_crystal(name, length=None):
    try:
        base = _REGISTRY[name]
    except KeyError:
        raise ConfigError(
            f"unknown crystal {name!r}; built-ins: {sorted(_REGISTRY)}"
        ) from None
    return base if length is None else base.with_length(length)


def _check_window(crystal, lam):
    lo, hi = crystal.window
    lam = np.asarray(lam)
    if np.any(lam < lo) or np.any(lam > hi):
        bad = float(np.min(lam)) if np.any(lam < lo) else float(np.max(lam))
        raise DomainError(
            f"wavelength {bad:g} um outside {crystal.name} transparency "
            f"window [{lo:g}, {hi:g}] um"
        )


def index_ordinary(crystal, wavelength):
    _check_window(crystal, wavelength)
    return crystal.sellmeier_o.n(wavelength)


def index_extraordinary(crystal, wavelength, theta):
    """Angle-tuned e-ray index; theta=0 reduces to n_o, pi/2 to principal n_e."""
    _check_window(crystal, wavelength)
    no2 = crystal.sellmeier_o.n2(wavelength)
    ne2 = crystal.sellmeier_e.n2(wavelength)
    ct2 = np.cos(theta) ** 2
    st2 = np.sin(theta) ** 2
    return 1.0 / np.sqrt(ct2 / no2 + st2 / ne2)


def _dn_theta_dlam(crystal, lam, theta):
    so, se = crystal.sellmeier_o, crystal.sellmeier_e
    no, ne = so.n(lam), se.n(lam)
    nth = index_extraordinary(crystal, lam, theta)
    ct2 = np.cos(theta) ** 2
    st2 = np.sin(theta) ** 2
    return nth**3 * (ct2 * so.dn_dlam(lam) / no**3 + st2 * se.dn_dlam(lam) / ne**3)


def group_index(crystal, wavelength, polarization, theta=None):
    """Group index N = n - lam*dn/dlam for 'o' or angle-tuned 'e' rays."""
    _check_window(crystal, wavelength)
    if polarization == "o":
        s = crystal.sellmeier_o
        return s.n(wavelength) - wavelength * s.dn_dlam(wavelength)
    if polarization == "e":
        if theta is None:
            raise ConfigError("e-ray group index needs the propagation angle")
        n = index_extraordinary(crystal, wavelength, theta)
        return n - wavelength * _dn_theta_dlam(crystal, wavelength, theta)
    raise ConfigError(f"polarization must be 'o' or 'e', got {polarization!r}")


def inverse_group_velocity(crystal, wavelength, polarization, theta=None):
    """1/u = N/C in fs/um."""
    return group_index(crystal, wavelength, polarization, theta) / C


def wavevector(crystal, wavelength, polarization, theta=None):
    """k = 2 pi n/lam in rad/um."""
    if polarization == "o":
        n = index_ordinary(crystal, wavelength)
    elif polarization == "e":
        if theta is None:
            raise ConfigError("e-ray wavevector needs the propagation angle")
        n = index_extraordinary(crystal, wavelength, theta)
    else:
        raise ConfigError(f"polarization must be 'o' or 'e', got {polarization!r}")
    return 2.0 * np.pi * n / wavelength


def _bisect(f, lo, hi, ftol, what, maxiter=200):
    """Certified bisection: requires a sign change, stops on |f| <= ftol."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if np.sign(flo) == np.sign(fhi):
        raise DomainError(what)
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if abs(fm) <= ftol:
            return mid
        if np.sign(fm) == np.sign(flo):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return 0.5 * (lo + hi)


def phase_matching_angle(crystal, pump_wavelength):
    """Collinear degenerate type-II phase-matching angle, |delta| < 1e-9 rad/um."""
    _check_window(crystal, pump_wavelength)
    _check_window(crystal, 2.0 * pump_wavelength)

    def delta(theta):
        return (
            wavevector(crystal, pump_wavelength, "e", theta)
            - wavevector(crystal, 2.0 * pump_wavelength, "o")
            - wavevector(crystal, 2.0 * pump_wavelength, "e", theta)
        )

    eps = 1e-6
    return _bisect(
        delta,
        eps,
        np.pi / 2 - eps,
        ftol=1e-9,
        what=(
            f"not phase-matchable: collinear degenerate type-II mismatch for "
            f"{crystal.name} at pump {pump_wavelength:g} um has no sign change "
            f"over theta in (0, pi/2)"
        ),
    )


def dispersion_params(crystal, pump):
    """DispersionSummary at the solved (or preset) phase-matching angle."""
    lam_p = pump.center_wavelength
    theta = crystal.cut_angle
    if theta is None:
        theta = phase_matching_angle(crystal, lam_p)
    lam_d = 2.0 * lam_p  # degenerate signal/idler wavelength
    inv_u_o = inverse_group_velocity(crystal, lam_d, "o")
    inv_u_e = inverse_group_velocity(crystal, lam_d, "e", theta)
    inv_u_p = inverse_group_velocity(crystal, lam_p, "e", theta)
    d_plus = 0.5 * (inv_u_o + inv_u_e) - inv_u_p
    d_big = inv_u_o - inv_u_e
    return DispersionSummary(
        inv_u_o=inv_u_o,
        inv_u_e=inv_u_e,
        inv_u_p=inv_u_p,
        d_plus=d_plus,
        d_big=d_big,
        dl=d_big * crystal.length,
        theta_pm=theta,
        length=crystal.length,
        pump_wavelength=lam_p,
    )


def find_symmetric_pump_wavelength(crystal, search_window=(0.60, 0.90)):
    """Pump wavelength with D+ = 0 (symmetric two-photon wavefunction).

    Bisection over the window with |D+| <= 1e-10 fs/um (tight enough that
    the residual tilt is invisible at the joint-spectrum symmetry tolerance);
    raises DomainError if D+ does not change sign across the window endpoints.
    """
    lo, hi = search_window
    if not 0 < lo < hi:
        raise ConfigError(f"bad search window {search_window}")

    def d_plus(lam_p):
        return dispersion_params(crystal, PumpSpec(lam_p, cw_flag=True)).d_plus

    return _bisect(
        d_plus,
        lo,
        hi,
        ftol=1e-10,
        what=(
            f"no symmetric point in window: D+ for {crystal.name} is "
            f"single-signed over [{lo:g}, {hi:g}] um"
        ),
    )
