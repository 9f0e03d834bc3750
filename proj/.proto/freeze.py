#!/usr/bin/env python3
"""Pin acceptance-grid crossings + freeze derived unit-test values."""
import math, itertools
import numpy as np
from oracle import (mb, mb_fit, entropy, dp_tables, divergence_exact, divergence_approx,
                    multinomial, n_type, ccdm_div, cum, kld)

support = [1, 3, 5, 7]
v = mb_fit(support, 1.25)
P = mb(support, v)
iota = [-math.log2(p) for p in P]
W = [a * a for a in support]
R = 1.25
WM = max(W)

def crossing(pts, target):
    for (n0, y0), (n1, y1) in zip(pts, pts[1:]):
        if y0 >= target > y1:
            t = (math.log(target) - math.log(y0)) / (math.log(y1) - math.log(y0))
            return math.exp(math.log(n0) + t * (math.log(n1) - math.log(n0)))
    return None

# --- SMDM recipe curve on multiples of 4, 8..512 ---
smdm = []
prev = np.array([1.0])
approx_vals = {}
for k in range(1, 513):
    cur = np.zeros(k * WM + 1)
    for wa in W:
        cur[wa:wa + len(prev)] += prev
    if k % 4 == 0 and k >= 52:
        n = k
        m = int(R * n)
        M = 2.0 ** m
        cn = np.cumsum(cur)
        wm = int(np.searchsorted(cn, M * (1 - 1e-13)))
        cprev = np.cumsum(prev)
        den = cn[wm]
        Q = [cprev[min(wm - W[a], len(cprev) - 1)] if wm - W[a] >= 0 else 0.0 for a in range(4)]
        approx_vals[n] = (-m + n * sum(q / den * it for q, it in zip(Q, iota))) / n
    prev = cur
for n in range(8, 49, 4):
    m = int(R * n)
    N = dp_tables(n, W)
    D, wmv, occ = divergence_exact(N, n, W, m, P, iota)
    smdm.append((n, D / n))
for n in sorted(approx_vals):
    smdm.append((n, approx_vals[n]))

# --- CCDM curve multiples of 4, 8..2048 ---
ccdm = []
for n in range(8, 2049, 4):
    counts = n_type(P, n)
    D, mc = ccdm_div(counts, P, iota)
    ccdm.append((n, D / n))

for target in (0.1, 0.01):
    ns = crossing(smdm, target)
    nc = crossing(ccdm, target)
    print(f"@{target}: n_smdm={ns:.3f} n_ccdm={nc:.3f} factor={nc/ns:.4f}")

print("\nSMDM grid values near crossings:",
      {n: round(d, 6) for n, d in smdm if n in (12, 16, 376, 380, 384, 388, 392)})
print("CCDM grid values near crossings:",
      {n: round(d, 6) for n, d in ccdm if n in (76, 80, 84, 88, 1296, 1300, 1304, 1308, 1312, 1316)})

# criterion 4a: SMDM < CCDM for all grid n (8..512)
cc = dict(ccdm)
viol = [(n, d, cc[n]) for n, d in smdm if d >= cc[n]]
print("criterion 4a violations:", viol)

# --- frozen unit test values ---
print("\nv* =", repr(v))
print("P  =", [repr(x) for x in P])
print("divergence((3/4,1/4)||(1/2,1/2)) =", repr(0.75 * math.log2(1.5) + 0.25 * math.log2(0.5)))
print("H(1/2,1/4,1/8,1/8) =", 0.5 * 1 + 0.25 * 2 + 2 * 0.125 * 3)

# n_type of MB(H=1.25) at n=8 + brute check
c8 = n_type(P, 8)
best, bestD = None, None
for c1 in range(9):
    for c2 in range(9 - c1):
        for c3 in range(9 - c1 - c2):
            c4 = 8 - c1 - c2 - c3
            c = [c1, c2, c3, c4]
            D = kld([x / 8 for x in c], P)
            if bestD is None or D < bestD - 1e-15:
                best, bestD = c, D
print("n_type(MB,8) =", c8, " brute best =", best, " D:", kld([x/8 for x in c8], P), bestD)

# divergence_exact n=2 {1,3} P=(3/4,1/4) W=(0,7) m=1
i34 = -math.log2(0.75); i14 = 2.0
print("D(n=2,m=1) =", repr(-1 + 0.5 * (2 * i34 + (i34 + i14))))
# optimal_input_length n=2: m in {0,1,2}
for m in (0, 1, 2):
    # codebook of first 2^m under W=(0,7): [11],[13],[31],[33]
    seqs = [[0,0],[0,1],[1,0],[1,1]]
    iot = [i34, i14]
    M = 1 << m
    D = -m + sum(sum(iot[a] for a in s) for s in seqs[:M]) / M
    print(f"  m={m}: D={D!r}")
print("ccdm (3,1) P=(3/4,1/4):", repr(-2 + 3 * i34 + i14))

# criterion 6 sanity: n=32 energy weights, all m in 1..64 valid (2^64 = 4^32)
print("\n4^32 =", 4**32, " 2^64 =", 2**64)

# criterion-5 frozen table for ledger
print("\ncriterion-5 (n, err_wm, err_wm1, bracket)/n:")
for n in (8, 16, 24, 32, 40, 48):
    m = int(R * n)
    N = dp_tables(n, W)
    D, wmv, occ = divergence_exact(N, n, W, m, P, iota)
    Dwm = divergence_approx(N, n, W, m, P, iota, wmv)
    Dwm1 = divergence_approx(N, n, W, m, P, iota, wmv - 1)
    print(f"  {n}: {abs(Dwm-D)/n:.6f} {abs(Dwm1-D)/n:.6f} {(Dwm-Dwm1)/n:.6f}")
