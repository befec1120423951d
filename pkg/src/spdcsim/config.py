"""Config-file schema and builders for the CLI.

Configs are JSON; user-facing quantities are nm, mm, fs, and degrees, and
convert to internal units (um, rad/fs, rad) here.  Every key is checked
against the schema and unknown keys anywhere raise ConfigError naming the
offender — a typo never silently falls back to a default.

    {
      "crystal":  {"name": "BBO", "length_mm": 2.0}
                  or a custom material:
                  {"name": "mine", "sellmeier_o": [a,b,c,d],
                   "sellmeier_e": [a,b,c,d], "window_um": [0.2, 3.0],
                   "length_mm": 2.0, "cut_angle_rad": 0.74}
      "pump":     {"wavelength_nm": 400, "bandwidth_nm": 2.0}
                  (or "duration_fs": 100.0, or "cw": true — exactly one)
      "analyzers":{"theta1_deg": 45, "theta2_deg": 45}
      "delay":    {"tau_fs": 0.0}
                  or {"scan": {"start_fs": -300, "stop_fs": 300, "points": 61}}
      "filters":  [{"shape": "gaussian", "center_nm": 800,
                    "bandwidth_nm": 5, "applies_to": "both"}]
      "grid":     {"time_points": 1024, "freq_points": 512,
                   "freq_half_window_sigma": null, "oversample": 4}
      "mode":     "linear" | "exact"
      "setup":    "synthesizer" | "standard"
    }
"""

import json

import numpy as np

from .dispersion import CrystalSpec, PumpSpec, Sellmeier, get_crystal
from .errors import ConfigError
from .spectral import FilterSpec
from .units import nm_to_um, sigma_p_from_bandwidth, sigma_p_from_duration

__all__ = [
    "load_config",
    "validate_config",
    "merge_overrides",
    "build_crystal",
    "build_pump",
    "build_filters",
    "build_analyzers",
    "build_delays",
]

_SCHEMA = {
    "crystal": {
        "name",
        "length_mm",
        "sellmeier_o",
        "sellmeier_e",
        "window_um",
        "cut_angle_rad",
    },
    "pump": {"wavelength_nm", "bandwidth_nm", "duration_fs", "cw"},
    "analyzers": {"theta1_deg", "theta2_deg"},
    "delay": {"tau_fs", "scan"},
    "delay.scan": {"start_fs", "stop_fs", "points"},
    "filters": {"shape", "center_nm", "bandwidth_nm", "applies_to"},
    "grid": {"time_points", "freq_points", "freq_half_window_sigma", "oversample"},
}
_TOP = {"crystal", "pump", "analyzers", "delay", "filters", "grid", "mode", "setup"}


def load_config(path):
    try:
        with open(path, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from None
    validate_config(cfg)
    return cfg


def _check_keys(section, allowed, where):
    if not isinstance(section, dict):
        raise ConfigError(f"{where} must be a JSON object")
    unknown = sorted(set(section) - allowed)
    if unknown:
        raise ConfigError(
            f"unknown key{'s' if len(unknown) > 1 else ''} in {where}: "
            + ", ".join(repr(k) for k in unknown)
        )


def validate_config(cfg):
    _check_keys(cfg, _TOP, "config")
    for name in ("crystal", "pump", "analyzers", "delay", "grid"):
        if name in cfg:
            _check_keys(cfg[name], _SCHEMA[name], name)
    if "delay" in cfg and "scan" in cfg["delay"]:
        _check_keys(cfg["delay"]["scan"], _SCHEMA["delay.scan"], "delay.scan")
    if "filters" in cfg:
        if not isinstance(cfg["filters"], list):
            raise ConfigError("filters must be a list")
        for i, filt in enumerate(cfg["filters"]):
            _check_keys(filt, _SCHEMA["filters"], f"filters[{i}]")
    if "mode" in cfg and cfg["mode"] not in ("linear", "exact"):
        raise ConfigError(f"mode must be 'linear' or 'exact', got {cfg['mode']!r}")
    if "setup" in cfg and cfg["setup"] not in ("standard", "synthesizer"):
        raise ConfigError(
            f"setup must be 'standard' or 'synthesizer', got {cfg['setup']!r}"
        )
    return cfg


def _deep_merge(cfg, overrides):
    out = dict(cfg)
    for key, val in overrides.items():
        if isinstance(val, dict) and isinstance(out.get(key), dict):
            out[key] = _deep_merge(out[key], val)
        else:
            out[key] = val
    return out


def merge_overrides(cfg, overrides):
    """Deep-merge flag overrides (already schema-shaped) over the config."""
    out = _deep_merge(cfg, overrides)
    validate_config(out)
    return out


def _require(section, key, where):
    try:
        return section[key]
    except KeyError:
        raise ConfigError(f"{where} needs {key!r}") from None


def _number(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise ConfigError(f"{where} must be a number, got {x!r}")
    return float(x)


def build_crystal(cfg):
    section = cfg.get("crystal", {"name": "BBO"})
    name = section.get("name", "BBO")
    length = None
    if "length_mm" in section:
        length = 1e3 * _number(section["length_mm"], "crystal.length_mm")
    if "sellmeier_o" in section or "sellmeier_e" in section:
        for key in ("sellmeier_o", "sellmeier_e"):
            coeffs = _require(section, key, "custom crystal")
            if not (isinstance(coeffs, list) and len(coeffs) == 4):
                raise ConfigError(f"crystal.{key} must be a list of 4 numbers")
        window = tuple(section.get("window_um", (0.2, 3.0)))
        crystal = CrystalSpec(
            name=name,
            sellmeier_o=Sellmeier(*[_number(v, "sellmeier_o") for v in section["sellmeier_o"]]),
            sellmeier_e=Sellmeier(*[_number(v, "sellmeier_e") for v in section["sellmeier_e"]]),
            length=length if length is not None else 2000.0,
            window=window,
        )
    else:
        crystal = get_crystal(name, length)
    if "cut_angle_rad" in section:
        crystal = crystal.with_cut_angle(
            _number(section["cut_angle_rad"], "crystal.cut_angle_rad")
        )
    return crystal


def build_pump(cfg):
    section = cfg.get("pump")
    if section is None:
        raise ConfigError("config needs a 'pump' section")
    lam = nm_to_um(_number(_require(section, "wavelength_nm", "pump"), "pump.wavelength_nm"))
    if not lam > 0:
        raise ConfigError("pump wavelength must be positive")
    modes = [k for k in ("bandwidth_nm", "duration_fs", "cw") if section.get(k)]
    if len(modes) != 1:
        raise ConfigError(
            "pump needs exactly one of bandwidth_nm, duration_fs, cw: true"
        )
    if modes[0] == "cw":
        return PumpSpec(lam, cw_flag=True)
    if modes[0] == "bandwidth_nm":
        bw = _number(section["bandwidth_nm"], "pump.bandwidth_nm")
        return PumpSpec(lam, sigma_p_from_bandwidth(bw, lam))
    dur = _number(section["duration_fs"], "pump.duration_fs")
    return PumpSpec(lam, sigma_p_from_duration(dur))


def build_filters(cfg):
    out = []
    for i, section in enumerate(cfg.get("filters", [])):
        out.append(
            FilterSpec(
                shape=section.get("shape", "gaussian"),
                center_wavelength=nm_to_um(
                    _number(_require(section, "center_nm", f"filters[{i}]"), "center_nm")
                ),
                bandwidth=_number(section.get("bandwidth_nm", 5.0), "bandwidth_nm"),
                applies_to=section.get("applies_to", "both"),
            )
        )
    return tuple(out)


def build_analyzers(cfg):
    section = cfg.get("analyzers", {})
    th1 = np.deg2rad(_number(section.get("theta1_deg", 45.0), "theta1_deg"))
    th2 = np.deg2rad(_number(section.get("theta2_deg", 45.0), "theta2_deg"))
    return th1, th2


def build_delays(cfg):
    """tau samples (fs) as an array; a single tau_fs gives a length-1 scan."""
    section = cfg.get("delay", {"tau_fs": 0.0})
    if "scan" in section:
        scan = section["scan"]
        start = _number(_require(scan, "start_fs", "delay.scan"), "start_fs")
        stop = _number(_require(scan, "stop_fs", "delay.scan"), "stop_fs")
        points = scan.get("points", 61)
        if not isinstance(points, int) or points < 2:
            raise ConfigError("delay.scan.points must be an integer >= 2")
        if not stop > start:
            raise ConfigError("delay.scan needs stop_fs > start_fs")
        return np.linspace(start, stop, points)
    return np.array([_number(section.get("tau_fs", 0.0), "delay.tau_fs")])
