#!/usr/bin/env python3
"""Brute-force cross-check of the DP-based exact divergence and partial histograms."""
import math, itertools
from oracle import mb, mb_fit, entropy, dp_tables, divergence_exact, divergence_approx, partial_hist, cum, w_max_of

support = [1, 3, 5, 7]
v = mb_fit(support, 1.25)
P = mb(support, v)
iota = [-math.log2(p) for p in P]
W = [a * a for a in support]

def brute(n, m):
    A = len(W)
    seqs = list(itertools.product(range(A), repeat=n))
    # sort by (weight, lex); lex = tuple order on indices (alphabet order)
    seqs.sort(key=lambda s: (sum(W[a] for a in s), s))
    M = 1 << m
    cb = seqs[:M]
    D = -m + sum(sum(iota[a] for a in s) for s in cb) / M
    occ = [0] * A
    for s in cb:
        for a in s:
            occ[a] += 1
    wm = sum(W[a] for a in cb[-1])
    return D, occ, wm, seqs

for (n, m) in [(4, 5), (6, 7), (8, 10)]:
    N = dp_tables(n, W)
    D_dp, wm_dp, occ_dp = divergence_exact(N, n, W, m, P, iota)
    D_bf, occ_bf, wm_bf, seqs = brute(n, m)
    print(f"n={n} m={m}: DP D={D_dp:.12f} wm={wm_dp} occ={occ_dp}")
    print(f"          BF D={D_bf:.12f} wm={wm_bf} occ={occ_bf}  match={abs(D_dp-D_bf)<1e-9 and occ_dp==occ_bf}")
    # partial hist check at wm
    ph = partial_hist(N, n, W, wm_dp)
    up_to = [s for s in seqs if sum(W[a] for a in s) <= wm_dp]
    occ2 = [0] * 4
    for s in up_to:
        for a in s:
            occ2[a] += 1
    tot = sum(occ2)
    ph_bf = [o / tot for o in occ2]
    print(f"          partial({wm_dp}) DP={[float(x) for x in ph]}")
    print(f"          partial({wm_dp}) BF={ph_bf}")
