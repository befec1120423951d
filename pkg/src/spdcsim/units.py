"""Unit system and boundary conversions.

Internal units everywhere: length in micrometers, time in femtoseconds,
angular frequency in rad/fs.  In these units the vacuum speed of light is
C = 0.299792458 um/fs and k = 2*pi*n/lambda comes out in rad/um, so D = 1/u_o
- 1/u_e is fs/um and D*L is directly a walk-off time in fs.

User-facing interfaces (CLI, config files) speak nanometers for wavelengths
and filter/pump bandwidths; conversion happens here and only here.

Bandwidth conventions
---------------------
"N nm bandwidth" means the intensity FWHM of the spectrum in wavelength.
Converted to angular frequency, dw_fwhm = 2*pi*C*dlam/lam**2, and the pump
amplitude envelope exp{-(w - Omega)^2/sigma_p^2} has intensity FWHM
sigma_p*sqrt(2 ln 2), so sigma_p = dw_fwhm/sqrt(2 ln 2).

"T fs pulse" means the intensity FWHM of the pulse duration; for the
transform-limited Gaussian pair used here sigma_p = 2*sqrt(2 ln 2)/T.

sigma_p = 0 denotes a cw pump (the temporal clock Gaussian degenerates to 1).
"""

import numpy as np

C = 0.299792458  # um/fs

_TWO_SQRT_2LN2 = 2.0 * np.sqrt(2.0 * np.log(2.0))
_SQRT_2LN2 = np.sqrt(2.0 * np.log(2.0))


def nm_to_um(x_nm):
    return x_nm * 1e-3


def um_to_nm(x_um):
    return x_um * 1e3


def wavelength_to_omega(lam_um):
    """Vacuum wavelength (um) -> angular frequency (rad/fs)."""
    return 2.0 * np.pi * C / lam_um


def omega_to_wavelength(omega):
    """Angular frequency (rad/fs) -> vacuum wavelength (um)."""
    return 2.0 * np.pi * C / omega


def fwhm_nm_to_domega(bw_nm, lam_um):
    """Intensity-FWHM wavelength bandwidth (nm) -> intensity-FWHM in rad/fs."""
    return 2.0 * np.pi * C * nm_to_um(bw_nm) / lam_um**2


def sigma_p_from_bandwidth(bw_nm, lam_um):
    """Pump amplitude-envelope width sigma_p (rad/fs) from nm bandwidth."""
    return fwhm_nm_to_domega(bw_nm, lam_um) / _SQRT_2LN2


def sigma_p_from_duration(t_fwhm_fs):
    """Pump width sigma_p (rad/fs) from intensity-FWHM pulse duration (fs)."""
    return _TWO_SQRT_2LN2 / t_fwhm_fs


def filter_domega(bw_nm, lam_um):
    """Filter intensity-FWHM (rad/fs) from its nm bandwidth at center lam."""
    return fwhm_nm_to_domega(bw_nm, lam_um)
