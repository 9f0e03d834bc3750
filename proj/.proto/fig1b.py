#!/usr/bin/env python3
"""Exact SMDM divergence at large n via float64 DP (counts < 2^1000 for n<=500)."""
import math
import numpy as np
from oracle import mb, mb_fit

support = [1, 3, 5, 7]
v = mb_fit(support, 1.25)
P = mb(support, v)
iota = [-math.log2(p) for p in P]
W = [a * a for a in support]
R = 1.25
WM = max(W)

def exact_div_float(n, m):
    rows = [np.zeros(k * WM + 1) for k in range(n + 1)]
    rows[0][0] = 1.0
    for k in range(1, n + 1):
        r = rows[k]
        p = rows[k - 1]
        for wa in W:
            r[wa:wa + len(p)] += p
    M = 2.0 ** m
    cn = np.cumsum(rows[n])
    wm = int(np.searchsorted(cn, M * (1 - 1e-13)))
    below = cn[wm - 1] if wm >= 1 else 0.0
    occ = np.zeros(4)
    cprev = np.cumsum(rows[n - 1])
    for a in range(4):
        w = wm - 1 - W[a]
        if w >= 0:
            occ[a] += n * cprev[min(w, len(cprev) - 1)]
    K = M - below
    r = wm
    for i in range(n):
        klen = n - i - 1
        for a in range(4):
            vv = r - W[a]
            cnt = rows[klen][vv] if 0 <= vv < len(rows[klen]) else 0.0
            if cnt <= 0:
                continue
            if K >= cnt * (1 - 1e-12):
                occ[a] += cnt
                if klen >= 1:
                    for c in range(4):
                        u = vv - W[c]
                        if 0 <= u < len(rows[klen - 1]):
                            occ[c] += klen * rows[klen - 1][u]
                K -= cnt
            else:
                occ[a] += K
                r = vv
                break
        else:
            break
    D = -m + float(np.dot(occ, iota)) / M
    # approx curves too
    cwm = cn[wm]
    Qwm = np.array([cprev[min(wm - W[a], len(cprev) - 1)] if wm - W[a] >= 0 else 0.0 for a in range(4)]) / cwm
    Dwm = -m + n * float(np.dot(Qwm, iota))
    cwm1 = cn[wm - 1]
    Qwm1 = np.array([cprev[min(wm - 1 - W[a], len(cprev) - 1)] if wm - 1 - W[a] >= 0 else 0.0 for a in range(4)]) / cwm1
    Dwm1 = -m + n * float(np.dot(Qwm1, iota))
    return D / n, Dwm / n, Dwm1 / n

print("n, m, exact/n, wm/n, wm1/n")
pts_exact, pts_wm, pts_wm1 = [], [], []
grid = [8, 12, 16, 20, 24, 28, 32, 36, 40, 44, 48, 52, 56, 64, 72, 84, 96, 112, 128, 148, 172, 200, 232, 268, 308, 356, 412, 476, 512]
for n in grid:
    m = math.ceil(R * n)
    e, a1, a2 = exact_div_float(n, m)
    pts_exact.append((n, e)); pts_wm.append((n, a1)); pts_wm1.append((n, a2))
    print(f"{n:4d} {m:4d} {e:.6f} {a1:.6f} {a2:.6f}")

def crossing(pts, target):
    for (n0, y0), (n1, y1) in zip(pts, pts[1:]):
        if y0 >= target > y1:
            t = (math.log(target) - math.log(y0)) / (math.log(y1) - math.log(y0))
            return math.exp(math.log(n0) + t * (math.log(n1) - math.log(n0)))
    return None

# criterion recipe: exact while m<=64 (n<=51), wm-approx beyond
recipe = [(n, e) for (n, e) in pts_exact if math.ceil(R * n) <= 64] + \
         [(n, a) for (n, a) in pts_wm if math.ceil(R * n) > 64]
for target in (0.1, 0.01):
    print(f"\n@{target}: exact={crossing(pts_exact, target)}, recipe={crossing(recipe, target)}, "
          f"wm={crossing(pts_wm, target)}, wm1={crossing(pts_wm1, target)}")
