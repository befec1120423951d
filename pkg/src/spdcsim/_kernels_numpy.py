"""Pure-numpy quadrature kernels (reference implementation).

Each kernel evaluates the real envelopes of the two interfering two-photon
wavefunction terms on a (t+, t-) grid and returns the four trapezoid-rule
reductions needed to assemble a normalized coincidence rate:

    E1 = integral g1^2,  E2 = integral g2^2,  X = integral g1*g2,
    Eref = integral gref^2

where gref is the undelayed wavefunction envelope on the same grid.  The
carrier phases cancel inside |A|^2 (the two terms of either setup share one
carrier), so everything here is real arithmetic.

sigma = 0 encodes a cw pump: the clock Gaussian degenerates to 1 and the
envelopes reduce to the box indicator.  The t- support is the open interval
(s_lo, s_hi) = the interval between 0 and D*L; boundary nodes get 0.

These functions are mirrored 1:1 by the numba twins in _kernels_numba; the
backend is chosen in _backend.
"""

import numpy as np


def _trapz_weights(n):
    w = np.ones(n)
    w[0] = 0.5
    w[-1] = 0.5
    return w


def _gauss(arg, sigma):
    if sigma > 0.0:
        return np.exp(-0.25 * sigma * sigma * arg * arg)
    return np.ones_like(arg)


def rate_terms_standard(tp, tm, sigma, r, s_lo, s_hi, tau):
    """Delay-line-before-splitter setup: terms Pi(t+, t-+tau) and Pi(t+, -t-+tau).

    Both the box support and the Gaussian clock see the shifted/mirrored
    difference-time argument.
    """
    u1 = tm + tau
    u2 = -tm + tau
    b1 = (u1 > s_lo) & (u1 < s_hi)
    b2 = (u2 > s_lo) & (u2 < s_hi)
    br = (tm > s_lo) & (tm < s_hi)
    T = tp[:, None]
    g1 = _gauss(T + r * u1[None, :], sigma) * b1[None, :]
    g2 = _gauss(T + r * u2[None, :], sigma) * b2[None, :]
    gr = _gauss(T + r * tm[None, :], sigma) * br[None, :]
    W = _trapz_weights(tp.size)[:, None] * _trapz_weights(tm.size)[None, :]
    scale = (tp[1] - tp[0]) * (tm[1] - tm[0])
    E1 = float(np.sum(W * g1 * g1)) * scale
    E2 = float(np.sum(W * g2 * g2)) * scale
    X = float(np.sum(W * g1 * g2)) * scale
    Er = float(np.sum(W * gr * gr)) * scale
    return E1, E2, X, Er


def rate_terms_synthesizer(tp, tm, sigma, r, s_lo, s_hi, tau):
    """Interferometric setup: terms Pi(t+ + tau/2, t- +/- tau) sharing the
    undelayed box support.

    The e-o delay re-clocks the pump Gaussian of each term (arguments
    t- +/- tau) and shifts the common mean-time origin by tau/2; the box
    stays put, which is what makes the closed-form peak-dip exponential
    exact for all tau (no box-slippage triangle).
    """
    br = (tm > s_lo) & (tm < s_hi)
    T = tp[:, None] + 0.5 * tau
    g1 = _gauss(T + r * (tm + tau)[None, :], sigma) * br[None, :]
    g2 = _gauss(T + r * (tm - tau)[None, :], sigma) * br[None, :]
    gr = _gauss(T + r * tm[None, :], sigma) * br[None, :]
    W = _trapz_weights(tp.size)[:, None] * _trapz_weights(tm.size)[None, :]
    scale = (tp[1] - tp[0]) * (tm[1] - tm[0])
    E1 = float(np.sum(W * g1 * g1)) * scale
    E2 = float(np.sum(W * g2 * g2)) * scale
    X = float(np.sum(W * g1 * g2)) * scale
    Er = float(np.sum(W * gr * gr)) * scale
    return E1, E2, X, Er
