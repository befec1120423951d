"""Pulsed type-II collinear SPDC: dispersion, two-photon wavefunctions,
interference, and joint spectra.

Time-domain model: the two-photon amplitude is a polarization-walk-off box
in the photons' arrival-time difference, multiplied by a pump-envelope
Gaussian tilted by the crystal's group-velocity mismatches.  Spectral
model: Gaussian pump times sinc phase matching, linearized or exact.
Units everywhere: µm, fs, rad/fs.
"""

__version__ = "0.1.0"

from .dispersion import (
    BBO,
    CrystalSpec,
    DispersionSummary,
    PumpSpec,
    Sellmeier,
    dispersion_params,
    find_symmetric_pump_wavelength,
    get_crystal,
    group_index,
    index_extraordinary,
    index_ordinary,
    inverse_group_velocity,
    phase_matching_angle,
    wavevector,
)
from .errors import ConfigError, DomainError, SpdcsimError, WindowingError
from .spectral import (
    FilterSpec,
    FreqGrid,
    SpectralDiagnostics,
    default_freq_axes,
    joint_spectral_amplitude,
    joint_spectrum,
    phase_mismatch_exact,
    phase_mismatch_linear,
    pump_envelope,
    spectral_diagnostics,
    time_domain_wavefunction,
)
from .temporal import (
    AnalyzerSettings,
    InterferencePattern,
    TimeGrid,
    WernerDiagnostic,
    amplitude_standard,
    amplitude_synthesizer,
    coincidence_rate,
    default_time_axes,
    interference_scan,
    pi_wavefunction,
    support,
    synthesizer_rate_closed_form,
    visibility,
    werner_epsilon,
    werner_epsilon_closed_form,
)
from .units import C

__all__ = [
    "__version__",
    "C",
    "BBO",
    "CrystalSpec",
    "DispersionSummary",
    "PumpSpec",
    "Sellmeier",
    "AnalyzerSettings",
    "InterferencePattern",
    "TimeGrid",
    "WernerDiagnostic",
    "FilterSpec",
    "FreqGrid",
    "SpectralDiagnostics",
    "SpdcsimError",
    "ConfigError",
    "DomainError",
    "WindowingError",
    "dispersion_params",
    "find_symmetric_pump_wavelength",
    "get_crystal",
    "group_index",
    "index_extraordinary",
    "index_ordinary",
    "inverse_group_velocity",
    "phase_matching_angle",
    "wavevector",
    "default_freq_axes",
    "joint_spectral_amplitude",
    "joint_spectrum",
    "phase_mismatch_exact",
    "phase_mismatch_linear",
    "pump_envelope",
    "spectral_diagnostics",
    "time_domain_wavefunction",
    "amplitude_standard",
    "amplitude_synthesizer",
    "coincidence_rate",
    "default_time_axes",
    "interference_scan",
    "pi_wavefunction",
    "support",
    "synthesizer_rate_closed_form",
    "visibility",
    "werner_epsilon",
    "werner_epsilon_closed_form",
]
