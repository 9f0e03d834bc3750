#!/usr/bin/env python3
"""Fig.1 curves: SMDM exact (m<=64) + w_max approx beyond; CCDM analytic; crossing factors."""
import math
from oracle import (mb, mb_fit, entropy, dp_tables, divergence_exact, divergence_approx,
                    multinomial, n_type, ccdm_div, cum)

support = [1, 3, 5, 7]
v = mb_fit(support, 1.25)
P = mb(support, v)
iota = [-math.log2(p) for p in P]
W = [a * a for a in support]
R = 1.25
wmax_sym = max(W)

# --- SMDM exact for n in 8..51 ---
print("n, m, D_exact/n, D_wm/n, D_wm1/n, fill K/N")
smdm_pts = []  # (n, D/n) per criterion-4 recipe
approx_err = {}
for n in range(8, 52):
    m = math.ceil(R * n)
    N = dp_tables(n, W)
    D, wm, occ = divergence_exact(N, n, W, m, P, iota)
    Dwm = divergence_approx(N, n, W, m, P, iota, wm)
    Dwm1 = divergence_approx(N, n, W, m, P, iota, wm - 1)
    K = (1 << m) - cum(N[n], wm - 1)
    fill = K / N[n][wm]
    smdm_pts.append((n, D / n))
    approx_err[n] = (abs(Dwm - D) / n, abs(Dwm1 - D) / n, (Dwm - Dwm1) / n, fill)
    if n in (8, 16, 24, 32, 40, 48, 51):
        print(f"{n:4d} {m:3d} {D/n:.6f} {Dwm/n:.6f} {Dwm1/n:.6f} {fill:.4f}")

print("\ncriterion-5 table: n, err_wm/n, err_wm1/n, bracket/n")
for n in (8, 16, 24, 32, 40, 48):
    e = approx_err[n]
    print(f"{n:4d} {e[0]:.6f} {e[1]:.6f} {e[2]:.6f}")

# --- SMDM approx(w_max) beyond 51 via rolling DP ---
grid_hi = [56, 64, 76, 88, 104, 124, 148, 176, 208, 248, 296, 352, 420, 500, 600]
rows = {0: [1]}
prev = [1]
approx_pts = []
maxn = grid_hi[-1]
need = set(grid_hi)
prev_row = [1]  # N_0
cur = None
store_prev = None
for k in range(1, maxn + 1):
    cur = [0] * (k * wmax_sym + 1)
    for w, c in enumerate(prev_row):
        if c:
            for wa in W:
                cur[w + wa] += c
    if k in need:
        n = k
        m = math.ceil(R * n)
        # cumulative of cur (N_n) and prev_row (N_{n-1})
        M = 1 << m
        acc = 0
        wm = None
        cumn = [0] * len(cur)
        s = 0
        for w, c in enumerate(cur):
            s += c
            cumn[w] = s
            if wm is None and s >= M:
                wm = w
        cump = [0] * (len(prev_row) + 1)
        s = 0
        for w, c in enumerate(prev_row):
            s += c
            cump[w] = s
        def cumprev(w):
            if w < 0:
                return 0
            return cump[min(w, len(prev_row) - 1)]
        den = cumn[min(wm, len(cur) - 1)]
        Dwm = -m + n * sum((cumprev(wm - W[a]) / den) * iota[a] for a in range(4) if cumprev(wm - W[a]) > 0)
        approx_pts.append((n, Dwm / n))
    prev_row = cur

print("\nSMDM approx(w_max) beyond 51:")
for n, d in approx_pts:
    print(f"{n:4d} {d:.6f}")

# --- CCDM analytic ---
ccdm_pts = []
n = 8
while n <= 3000:
    counts = n_type(P, n)
    D, mc = ccdm_div(counts, P, iota)
    ccdm_pts.append((n, D / n))
    n += max(1, n // 12)

print("\nCCDM curve (sampled):")
for n, d in ccdm_pts:
    if d < 0.2:
        pass
print(" ".join(f"{n}:{d:.4f}" for n, d in ccdm_pts))

def crossing(pts, target):
    """first n where curve goes below target, log-log interpolated"""
    for (n0, y0), (n1, y1) in zip(pts, pts[1:]):
        if y0 >= target > y1:
            t = (math.log(target) - math.log(y0)) / (math.log(y1) - math.log(y0))
            return math.exp(math.log(n0) + t * (math.log(n1) - math.log(n0)))
    return None

smdm_curve = smdm_pts + approx_pts
for target in (0.1, 0.01):
    ns = crossing(smdm_curve, target)
    nc = crossing(ccdm_pts, target)
    print(f"\ntarget {target}: n_SMDM={ns:.2f}  n_CCDM={nc:.2f}  factor={nc/ns:.3f}")
