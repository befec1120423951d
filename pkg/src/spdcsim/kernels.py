"""Public kernel entry points, dispatched to the selected backend.

See _kernels_numpy for the quadrature contract and _backend for selection
(SPDCSIM_BACKEND=numba|numpy|auto).  The first call resolves the backend;
until then importing this module costs only numpy.
"""

from ._backend import backend_name, resolve, set_backend  # noqa: F401


def rate_terms_standard(tp, tm, sigma, r, s_lo, s_hi, tau):
    return resolve()[1].rate_terms_standard(tp, tm, sigma, r, s_lo, s_hi, tau)


def rate_terms_synthesizer(tp, tm, sigma, r, s_lo, s_hi, tau):
    return resolve()[1].rate_terms_synthesizer(tp, tm, sigma, r, s_lo, s_hi, tau)
