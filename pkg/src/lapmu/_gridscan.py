"""Compiled exhaustive scan over the 4-coordinate sign-symmetric grid.

Evaluates F(x)/||x||_p^2 at every grid point via pairwise lookup tables and
prunes whole index slabs with upper bounds, so the hot loop only pays for
regions that can still beat the running maximum.
"""

import numpy as np
from numba import njit

# inflate bounds by one part in 1e12 so rounding can never prune a point
# that ties the running maximum
_SAFETY = 1.0 + 1e-12


@njit(cache=True)
def scan4(pa, d01, d02, d03, d12, d13, d23, two_over_p, best):
    r = pa.shape[0]
    pa_min = pa[0]
    for i in range(r):
        if pa[i] < pa_min:
            pa_min = pa[i]

    # per-row maxima of the coupling tables, for the prune bounds
    m02 = np.empty(r)
    m03 = np.empty(r)
    m12 = np.empty(r)
    m13 = np.empty(r)
    m23 = np.empty(r)
    big23 = 0.0
    for i in range(r):
        m02[i] = d02[i].max()
        m03[i] = d03[i].max()
        m12[i] = d12[i].max()
        m13[i] = d13[i].max()
        m23[i] = d23[i].max()
        if m23[i] > big23:
            big23 = m23[i]

    for i0 in range(r):
        pa0 = pa[i0]
        for i1 in range(r):
            f01 = d01[i0, i1]
            n01 = pa0 + pa[i1]
            # bound over all (i2, i3) for this (i0, i1) pair
            num1 = f01 + m02[i0] + m12[i1] + m03[i0] + m13[i1] + big23
            den1 = n01 + 2.0 * pa_min
            if den1 > 0.0 and num1 * _SAFETY <= best * den1**two_over_p:
                continue
            for i2 in range(r):
                f012 = f01 + d02[i0, i2] + d12[i1, i2]
                n012 = n01 + pa[i2]
                num2 = f012 + m03[i0] + m13[i1] + m23[i2]
                den2 = n012 + pa_min
                if den2 > 0.0 and num2 * _SAFETY <= best * den2**two_over_p:
                    continue
                for i3 in range(r):
                    nn = n012 + pa[i3]
                    if nn <= 0.0:
                        continue
                    f = f012 + d03[i0, i3] + d13[i1, i3] + d23[i2, i3]
                    val = f / nn**two_over_p
                    if val > best:
                        best = val
    return best
