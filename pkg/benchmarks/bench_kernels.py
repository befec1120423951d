"""Time the interference kernels under both backends.

Run:  python benchmarks/bench_kernels.py

Measures rate_terms_standard / rate_terms_synthesizer on 512x512 and
1024x1024 grids built from the 3 mm BBO / 400 nm / 2 nm reference point,
first with the pure-numpy backend, then with the compiled one (first call
includes JIT compilation and is reported separately).
"""

import time

import numpy as np

from spdcsim import dispersion, kernels, units
from spdcsim.temporal import default_time_axes


def _setup(n):
    crystal = dispersion.get_crystal("BBO").with_length(3e3)
    pump = dispersion.PumpSpec(0.4, units.sigma_p_from_bandwidth(2.0, 0.4))
    disp = dispersion.dispersion_params(crystal, pump)
    tp, tm = default_time_axes(disp, pump, tau_max=300.0, n=n)
    lo, hi = sorted((0.0, disp.dl))
    return tp, tm, pump.sigma_p, disp.tilt, lo, hi


def _time(fn, *args, repeats=5):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    for n in (512, 1024):
        tp, tm, sigma, r, lo, hi = _setup(n)
        print(f"\n--- grid {n}x{n} ---")
        for backend in ("numpy", "numba"):
            try:
                kernels.set_backend(backend)
            except Exception as exc:  # numba may be absent
                print(f"{backend:>6}: unavailable ({exc})")
                continue
            for name, fn in (
                ("standard", kernels.rate_terms_standard),
                ("synthesizer", kernels.rate_terms_synthesizer),
            ):
                t_first = _time(fn, tp, tm, sigma, r, lo, hi, 50.0, repeats=1)
                t_best = _time(fn, tp, tm, sigma, r, lo, hi, 50.0)
                print(
                    f"{backend:>6} {name:<12} first {t_first * 1e3:8.1f} ms   "
                    f"best {t_best * 1e3:8.1f} ms"
                )


if __name__ == "__main__":
    main()
