"""Command-line front door.

Subcommands
-----------
dispersion      print the walk-off summary (JSON to stdout)
scan-symmetric  solve the symmetric pump wavelength over a window
wavefunction    write a time-domain grid bundle (analytic-pi | standard |
                synthesizer)
interference    write a delay-scan bundle with its visibility report
spectrum        write a joint-spectrum bundle with correlation diagnostics
scenario        run a named preset (see list-scenarios)
list-scenarios  print the scenario table

Configuration comes from --config (JSON, schema in the config module) with
flags overriding file values; user-facing units are nm, mm, fs, degrees.
Everything is deterministic — identical inputs produce byte-identical files.
Exit codes: 0 success, 2 configuration error, 3 domain error (outside the
model's validity), 4 scenario expectation failed.

`interference --mode` selects the detection geometry (standard |
synthesizer); `spectrum --mode` selects the phase-mismatch treatment
(linear | exact).  A synthesizer interference report quotes the two-branch
visibility (peak vs dip rates), which the closed form predicts to be 1 at
zero delay for every crystal length, pump bandwidth, and wavelength.

--threads is accepted for interface stability; the kernels are sequential,
so results never depend on it.
"""

import argparse
import json
import os
import sys

from .errors import ConfigError, DomainError

__all__ = ["main"]


def _print_json(obj):
    from . import gridio

    print(json.dumps(gridio.sanitize(obj), sort_keys=True, indent=2))


def _add_common(sub, pump_required=True):
    sub.add_argument("--config", help="JSON config file")
    sub.add_argument("--crystal", help="built-in crystal name (default BBO)")
    sub.add_argument("--length-mm", type=float, help="crystal length in mm")
    sub.add_argument("--pump-nm", type=float, help="pump center wavelength, nm")
    sub.add_argument(
        "--bandwidth-nm", type=float, help="pump bandwidth (intensity FWHM), nm"
    )
    sub.add_argument(
        "--duration-fs", type=float, help="pump duration (intensity FWHM), fs"
    )
    sub.add_argument("--cw", action="store_true", help="cw pump")
    sub.add_argument("--theta1-deg", type=float, help="analyzer 1 angle, degrees")
    sub.add_argument("--theta2-deg", type=float, help="analyzer 2 angle, degrees")
    sub.add_argument("--tau-fs", type=float, help="e-o delay, fs")
    sub.add_argument(
        "--scan",
        help="delay scan as start:stop:points in fs, e.g. -300:300:61",
    )
    sub.add_argument("--time-points", type=int, help="time-grid samples per axis")
    sub.add_argument("--freq-points", type=int, help="frequency-grid samples per axis")
    sub.add_argument("--out", help="output directory for file bundles")


def _overrides_from_args(args):
    ov = {}
    crystal = {}
    if getattr(args, "crystal", None):
        crystal["name"] = args.crystal
    if getattr(args, "length_mm", None) is not None:
        crystal["length_mm"] = args.length_mm
    if crystal:
        ov["crystal"] = crystal
    pump = {}
    if getattr(args, "pump_nm", None) is not None:
        pump["wavelength_nm"] = args.pump_nm
    if getattr(args, "bandwidth_nm", None) is not None:
        pump["bandwidth_nm"] = args.bandwidth_nm
    if getattr(args, "duration_fs", None) is not None:
        pump["duration_fs"] = args.duration_fs
    if getattr(args, "cw", False):
        pump["cw"] = True
    if pump:
        ov["pump"] = pump
    analyzers = {}
    if getattr(args, "theta1_deg", None) is not None:
        analyzers["theta1_deg"] = args.theta1_deg
    if getattr(args, "theta2_deg", None) is not None:
        analyzers["theta2_deg"] = args.theta2_deg
    if analyzers:
        ov["analyzers"] = analyzers
    if getattr(args, "tau_fs", None) is not None:
        ov["delay"] = {"tau_fs": args.tau_fs}
    if getattr(args, "scan", None):
        parts = args.scan.split(":")
        if len(parts) != 3:
            raise ConfigError(
                f"bad --scan {args.scan!r}; expected start:stop:points"
            )
        try:
            start, stop, points = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise ConfigError(
                f"bad --scan {args.scan!r}; expected start:stop:points"
            ) from None
        ov["delay"] = {
            "scan": {"start_fs": start, "stop_fs": stop, "points": points}
        }
    grid = {}
    if getattr(args, "time_points", None) is not None:
        grid["time_points"] = args.time_points
    if getattr(args, "freq_points", None) is not None:
        grid["freq_points"] = args.freq_points
    if grid:
        ov["grid"] = grid
    return ov


def _config_from_args(args, base=None):
    from . import config as cfgmod

    cfg = dict(base) if base else {}
    if getattr(args, "config", None):
        cfg = cfgmod.merge_overrides(cfg, cfgmod.load_config(args.config))
    ov = _overrides_from_args(args)
    if ov:
        # A delay or pump-width override replaces the base's choice instead
        # of stacking a second, mutually-exclusive one next to it.
        if "delay" in ov:
            cfg.pop("delay", None)
        if "pump" in ov and ov["pump"].keys() & {"bandwidth_nm", "duration_fs", "cw"}:
            base_pump = dict(cfg.get("pump", {}))
            for key in ("bandwidth_nm", "duration_fs", "cw"):
                base_pump.pop(key, None)
            cfg = dict(cfg)
            cfg["pump"] = base_pump
        cfg = cfgmod.merge_overrides(cfg, ov)
    cfgmod.validate_config(cfg)
    return cfg


def _grid_value(cfg, key, default):
    return cfg.get("grid", {}).get(key, default)


def _outdir(args, default_leaf):
    out = args.out if getattr(args, "out", None) else os.path.join("out", default_leaf)
    os.makedirs(out, exist_ok=True)
    return out


# ------------------------------------------------------------- handlers


def _cmd_dispersion(args):
    from . import config as cfgmod
    from .dispersion import dispersion_params

    cfg = _config_from_args(args)
    crystal = cfgmod.build_crystal(cfg)
    pump = cfgmod.build_pump(cfg)
    disp = dispersion_params(crystal, pump)
    _print_json(
        {
            "crystal": crystal.name,
            "length_um": disp.length,
            "pump_wavelength_um": disp.pump_wavelength,
            "theta_pm_rad": disp.theta_pm,
            "inv_u_o_fs_um": disp.inv_u_o,
            "inv_u_e_fs_um": disp.inv_u_e,
            "inv_u_p_fs_um": disp.inv_u_p,
            "d_plus_fs_um": disp.d_plus,
            "d_big_fs_um": disp.d_big,
            "dl_fs": disp.dl,
            "tilt": disp.tilt,
            "sigma_p_rad_fs": pump.sigma_p,
        }
    )
    return 0


def _parse_window_nm(text):
    t = text.strip().lower()
    if t.endswith("nm"):
        t = t[:-2]
    lo, sep, hi = t.partition(":")
    if not sep:
        raise ConfigError(f"bad --window {text!r}; expected like 600:900nm")
    try:
        lo_nm, hi_nm = float(lo), float(hi)
    except ValueError:
        raise ConfigError(f"bad --window {text!r}; expected like 600:900nm") from None
    if not 0 < lo_nm < hi_nm:
        raise ConfigError(f"--window needs 0 < low < high, got {text!r}")
    return lo_nm, hi_nm


def _cmd_scan_symmetric(args):
    from .dispersion import find_symmetric_pump_wavelength, get_crystal
    from .units import nm_to_um, um_to_nm

    lo_nm, hi_nm = _parse_window_nm(args.window)
    crystal = get_crystal(args.crystal or "BBO")
    lam = find_symmetric_pump_wavelength(
        crystal, (nm_to_um(lo_nm), nm_to_um(hi_nm))
    )
    _print_json(
        {
            "crystal": crystal.name,
            "window_nm": [lo_nm, hi_nm],
            "symmetric_pump_nm": um_to_nm(lam),
        }
    )
    return 0


def _cmd_wavefunction(args):
    import numpy as np

    from . import config as cfgmod
    from . import gridio
    from .dispersion import dispersion_params
    from .temporal import (
        AnalyzerSettings,
        amplitude_standard,
        amplitude_synthesizer,
        coincidence_rate,
        default_time_axes,
        pi_wavefunction,
    )

    cfg = _config_from_args(args)
    crystal = cfgmod.build_crystal(cfg)
    pump = cfgmod.build_pump(cfg)
    disp = dispersion_params(crystal, pump)
    taus = cfgmod.build_delays(cfg)
    tau = float(taus[0])
    th1, th2 = cfgmod.build_analyzers(cfg)
    n = _grid_value(cfg, "time_points", 512)
    tp, tm = default_time_axes(disp, pump, abs(tau), n)

    report = {"kind": args.kind, "tau_fs": tau}
    if args.kind == "analytic-pi":
        vals = pi_wavefunction(tp[:, None], tm[None, :], disp, pump)
        meta_grid = {}
    else:
        build = (
            amplitude_standard if args.kind == "standard" else amplitude_synthesizer
        )
        grid = build(tp, tm, disp, pump, AnalyzerSettings(th1, th2, tau))
        vals = grid.values
        report["coincidence_rate"] = coincidence_rate(grid)
        meta_grid = {
            k: v for k, v in grid.meta.items() if not isinstance(v, np.ndarray)
        }

    out = _outdir(args, "wavefunction")
    gridio.write_grid_csv(
        os.path.join(out, "grid.csv"), tp, tm, vals, ("t_plus_fs", "t_minus_fs")
    )
    gridio.write_json(
        os.path.join(out, "meta.json"),
        {"config": cfg, "derived": {"dispersion": disp}, "grid": meta_grid},
    )
    gridio.write_json(os.path.join(out, "report.json"), report)
    _print_json(report)
    return 0


def _cmd_interference(args):
    import numpy as np

    from . import config as cfgmod
    from . import gridio, kernels
    from .dispersion import dispersion_params
    from .temporal import interference_scan

    base = None
    if args.scenario_like:
        from .scenarios import scenario_config

        base = scenario_config(args.scenario_like)
        base.pop("mode", None)
    cfg = _config_from_args(args, base)
    setup = args.mode or cfg.get("setup", "synthesizer")
    crystal = cfgmod.build_crystal(cfg)
    pump = cfgmod.build_pump(cfg)
    disp = dispersion_params(crystal, pump)
    taus = cfgmod.build_delays(cfg)
    th1, th2 = cfgmod.build_analyzers(cfg)
    n = _grid_value(cfg, "time_points", 1024)

    out = _outdir(args, "interference")
    if setup == "synthesizer":
        pat_peak = interference_scan(taus, disp, pump, th1, th2, setup, n=n)
        pat_dip = interference_scan(taus, disp, pump, th1, -th2, setup, n=n)
        both = np.concatenate([pat_peak.rates, pat_dip.rates])
        hi, lo = float(np.max(both)), float(np.min(both))
        vis = (hi - lo) / (hi + lo) if hi + lo > 0 else 0.0
        gridio.write_table_csv(
            os.path.join(out, "grid.csv"),
            ["tau_fs", "rate_peak", "rate_dip"],
            [taus, pat_peak.rates, pat_dip.rates],
        )
        report = {
            "setup": setup,
            "visibility": vis,
            "visibility_peak_branch": pat_peak.visibility,
            "visibility_dip_branch": pat_dip.visibility,
        }
    else:
        pat = interference_scan(taus, disp, pump, th1, th2, setup, n=n)
        gridio.write_table_csv(
            os.path.join(out, "grid.csv"),
            ["tau_fs", "rate"],
            [taus, pat.rates],
        )
        report = {"setup": setup, "visibility": pat.visibility}
    gridio.write_json(
        os.path.join(out, "meta.json"),
        {
            "config": cfg,
            "derived": {"dispersion": disp, "sigma_p_rad_fs": pump.sigma_p},
            "backend": kernels.backend_name(),
        },
    )
    gridio.write_json(os.path.join(out, "report.json"), report)
    _print_json(report)
    return 0


def _cmd_spectrum(args):
    from . import config as cfgmod
    from . import gridio
    from .dispersion import dispersion_params
    from .spectral import (
        default_freq_axes,
        joint_spectral_amplitude,
        spectral_diagnostics,
    )

    cfg = _config_from_args(args)
    mode = args.mode or cfg.get("mode", "linear")
    crystal = cfgmod.build_crystal(cfg)
    pump = cfgmod.build_pump(cfg)
    disp = dispersion_params(crystal, pump)
    filters = cfgmod.build_filters(cfg)
    n = _grid_value(cfg, "freq_points", 512)
    half_sigma = _grid_value(cfg, "freq_half_window_sigma", None)
    half = half_sigma * pump.sigma_p if half_sigma is not None else None
    we, wo = default_freq_axes(disp, pump, n, half_window=half)
    jsa = joint_spectral_amplitude(we, wo, crystal, pump, disp, mode, filters)
    diag = spectral_diagnostics(jsa)

    out = _outdir(args, "spectrum")
    gridio.write_grid_csv(
        os.path.join(out, "grid.csv"),
        jsa.omega_e_axis,
        jsa.omega_o_axis,
        jsa.values,
        ("omega_e_rad_fs", "omega_o_rad_fs"),
    )
    report = {
        "mode": mode,
        "pearson_rho": diag.pearson_rho,
        "schmidt_number": diag.schmidt_number,
        "classification": diag.classification,
    }
    gridio.write_json(
        os.path.join(out, "meta.json"),
        {"config": cfg, "derived": {"dispersion": disp, "sigma_p_rad_fs": pump.sigma_p}},
    )
    gridio.write_json(os.path.join(out, "report.json"), report)
    _print_json(report)
    return 0


def _cmd_scenario(args):
    from .scenarios import run_scenario

    report = run_scenario(args.id, args.out or "out")
    _print_json(report)
    return 0 if report["passed"] else 4


def _cmd_list_scenarios(args):
    from .scenarios import list_scenarios

    _print_json(list_scenarios())
    return 0


# ------------------------------------------------------------- parser


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="spdcsim",
        description=(
            "Pulsed type-II collinear SPDC simulator: dispersion solves, "
            "two-photon wavefunctions, interference scans, joint spectra."
        ),
    )
    parser.add_argument(
        "--backend",
        choices=("auto", "numba", "numpy"),
        help="kernel backend (default: auto — numba when importable)",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="accepted for interface stability; results are identical",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("dispersion", help="print the walk-off summary")
    _add_common(p)
    p.set_defaults(func=_cmd_dispersion)

    p = subs.add_parser(
        "scan-symmetric", help="solve the symmetric pump wavelength"
    )
    p.add_argument("--crystal", default="BBO")
    p.add_argument(
        "--window",
        default="600:900nm",
        help="search window, e.g. 600:900nm",
    )
    p.set_defaults(func=_cmd_scan_symmetric)

    p = subs.add_parser("wavefunction", help="write a time-domain grid bundle")
    p.add_argument(
        "--kind",
        choices=("analytic-pi", "standard", "synthesizer"),
        default="analytic-pi",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_wavefunction)

    p = subs.add_parser("interference", help="write a delay-scan bundle")
    p.add_argument(
        "--scenario-like",
        dest="scenario_like",
        help="start from a scenario's configuration (e.g. fig5)",
    )
    p.add_argument(
        "--mode",
        choices=("standard", "synthesizer"),
        help="detection geometry (default from config, else synthesizer)",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_interference)

    p = subs.add_parser("spectrum", help="write a joint-spectrum bundle")
    p.add_argument(
        "--mode",
        choices=("linear", "exact"),
        help="phase-mismatch treatment (default from config, else linear)",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_spectrum)

    p = subs.add_parser("scenario", help="run a named preset")
    p.add_argument("id", help="scenario id (see list-scenarios)")
    p.add_argument("--out", help="output root (default: out)")
    p.set_defaults(func=_cmd_scenario)

    p = subs.add_parser("list-scenarios", help="print the scenario table")
    p.set_defaults(func=_cmd_list_scenarios)
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.backend:
            from . import kernels

            kernels.set_backend(args.backend)
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
