"""Numba-compiled twins of the kernels in _kernels_numpy.

Explicit sequential loops, cache=True so compiled artifacts persist across
processes, no fastmath (bit-reproducible accumulation order).  Kept textually
parallel to the numpy reference; see that module for the physics notes.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def rate_terms_standard(tp, tm, sigma, r, s_lo, s_hi, tau):
    ntp = tp.shape[0]
    ntm = tm.shape[0]
    q = 0.25 * sigma * sigma
    E1 = 0.0
    E2 = 0.0
    X = 0.0
    Er = 0.0
    for i in range(ntp):
        wi = 0.5 if (i == 0 or i == ntp - 1) else 1.0
        t = tp[i]
        for j in range(ntm):
            wj = 0.5 if (j == 0 or j == ntm - 1) else 1.0
            w = wi * wj
            u1 = tm[j] + tau
            u2 = -tm[j] + tau
            g1 = 0.0
            g2 = 0.0
            gr = 0.0
            if s_lo < u1 < s_hi:
                a = t + r * u1
                g1 = np.exp(-q * a * a) if sigma > 0.0 else 1.0
            if s_lo < u2 < s_hi:
                a = t + r * u2
                g2 = np.exp(-q * a * a) if sigma > 0.0 else 1.0
            if s_lo < tm[j] < s_hi:
                a = t + r * tm[j]
                gr = np.exp(-q * a * a) if sigma > 0.0 else 1.0
            E1 += w * g1 * g1
            E2 += w * g2 * g2
            X += w * g1 * g2
            Er += w * gr * gr
    scale = (tp[1] - tp[0]) * (tm[1] - tm[0])
    return E1 * scale, E2 * scale, X * scale, Er * scale


@njit(cache=True)
def rate_terms_synthesizer(tp, tm, sigma, r, s_lo, s_hi, tau):
    ntp = tp.shape[0]
    ntm = tm.shape[0]
    q = 0.25 * sigma * sigma
    E1 = 0.0
    E2 = 0.0
    X = 0.0
    Er = 0.0
    for i in range(ntp):
        wi = 0.5 if (i == 0 or i == ntp - 1) else 1.0
        t = tp[i] + 0.5 * tau
        for j in range(ntm):
            wj = 0.5 if (j == 0 or j == ntm - 1) else 1.0
            w = wi * wj
            g1 = 0.0
            g2 = 0.0
            gr = 0.0
            if s_lo < tm[j] < s_hi:
                if sigma > 0.0:
                    a1 = t + r * (tm[j] + tau)
                    a2 = t + r * (tm[j] - tau)
                    ar = t + r * tm[j]
                    g1 = np.exp(-q * a1 * a1)
                    g2 = np.exp(-q * a2 * a2)
                    gr = np.exp(-q * ar * ar)
                else:
                    g1 = 1.0
                    g2 = 1.0
                    gr = 1.0
            E1 += w * g1 * g1
            E2 += w * g2 * g2
            X += w * g1 * g2
            Er += w * gr * gr
    scale = (tp[1] - tp[0]) * (tm[1] - tm[0])
    return E1 * scale, E2 * scale, X * scale, Er * scale
