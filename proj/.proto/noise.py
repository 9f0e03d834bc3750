#!/usr/bin/env python3
"""Dense noise profiling: CCDM near 0.1 and 0.01 crossings; SMDM wm-approx near 0.01."""
import math
import numpy as np
from oracle import mb, mb_fit, n_type, ccdm_div, multinomial

support = [1, 3, 5, 7]
v = mb_fit(support, 1.25)
P = mb(support, v)
iota = [-math.log2(p) for p in P]
W = [a * a for a in support]
R = 1.25
WM = max(W)

print("CCDM dense near 0.1:")
vals = {}
for n in range(40, 135):
    counts = n_type(P, n)
    D, mc = ccdm_div(counts, P, iota)
    vals[n] = D / n
below = [n for n in range(40, 135) if vals[n] < 0.1]
print("first n with D/n<0.1:", below[0] if below else None)
print("all dips below 0.1 before stable:", [n for n in below if n < 75])
print({n: round(vals[n], 4) for n in range(48, 85)})

print("\nCCDM dense near 0.01 (step 10):")
vals2 = {}
for n in range(1150, 1651, 10):
    counts = n_type(P, n)
    D, mc = ccdm_div(counts, P, iota)
    vals2[n] = D / n
below2 = [n for n in vals2 if vals2[n] < 0.01]
print("first:", below2[0] if below2 else None, " values:", {n: round(vals2[n], 5) for n in sorted(vals2) if n % 50 <= 10 or vals2[n] < 0.0102})

# SMDM wm-approx dense 330..520 via rolling DP (float)
print("\nSMDM wm-approx dense:")
prev = np.array([1.0])
res = {}
for k in range(1, 525):
    cur = np.zeros(k * WM + 1)
    for wa in W:
        cur[wa:wa + len(prev)] += prev
    if 330 <= k <= 524 and k % 2 == 0:
        n = k
        m = math.ceil(R * n)
        M = 2.0 ** m
        cn = np.cumsum(cur)
        wm = int(np.searchsorted(cn, M * (1 - 1e-13)))
        cprev = np.cumsum(prev)
        den = cn[wm]
        Q = np.array([cprev[min(wm - W[a], len(cprev) - 1)] if wm - W[a] >= 0 else 0.0 for a in range(4)]) / den
        res[n] = (-m + n * float(np.dot(Q, iota))) / n
    prev = cur
first = None
for n in sorted(res):
    if res[n] < 0.01:
        first = n
        break
print("first even n with wm-approx<0.01:", first)
print({n: round(res[n], 5) for n in sorted(res) if 350 <= n <= 470})
