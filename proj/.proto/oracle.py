#!/usr/bin/env python3
"""Independent oracle for the SMDM artifact: exact big-int DP, Fig.1 curves, derived values."""
import math
from fractions import Fraction

LOG2E = 1.0 / math.log(2.0)

def mb(support, v):
    e0 = min(a * a for a in support)
    w = [math.exp(-v * (a * a - e0)) for a in support]
    s = sum(w)
    return [x / s for x in w]

def entropy(p):
    return sum(-x * math.log2(x) for x in p if x > 0)

def mb_fit(support, H, tol=1e-12):
    lo, hi = 0.0, 1.0
    if abs(entropy(mb(support, 0.0)) - H) <= tol:
        return 0.0
    while entropy(mb(support, hi)) > H:
        hi *= 2
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if entropy(mb(support, mid)) > H:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)

def dp_tables(n, W):
    wmax = max(W)
    N = [[0] * (k * wmax + 1) for k in range(n + 1)]
    N[0][0] = 1
    for k in range(1, n + 1):
        row = N[k]
        prev = N[k - 1]
        for w in range(len(prev)):
            c = prev[w]
            if c:
                for wa in W:
                    row[w + wa] += c
    return N

def cum(row, w):
    if w < 0:
        return 0
    return sum(row[: min(w, len(row) - 1) + 1])

def w_max_of(N, n, M):
    row = N[n]
    acc = 0
    for w in range(len(row)):
        acc += row[w]
        if acc >= M:
            return w
    raise ValueError("M exceeds |A|^n")

def exact_occ(N, n, W, M):
    """occurrence counts over the first M sequences in (weight, lex) order; exact ints"""
    A = len(W)
    wm = w_max_of(N, n, M)
    occ = [0] * A
    # full shells: weight <= wm-1
    below = cum(N[n], wm - 1)
    for a in range(A):
        occ[a] += n * cum(N[n - 1], wm - 1 - W[a]) if n >= 1 else 0
    # boundary shell: first K of weight exactly wm
    K = M - below
    r = wm
    for i in range(n):
        klen = n - i - 1
        for a in range(A):
            v = r - W[a]
            cnt = N[klen][v] if 0 <= v < len(N[klen]) else 0
            if cnt == 0:
                continue
            if K >= cnt:
                occ[a] += cnt
                for c in range(A):
                    u = v - W[c]
                    if klen >= 1 and 0 <= u < len(N[klen - 1]):
                        occ[c] += klen * N[klen - 1][u]
                K -= cnt
            else:
                occ[a] += K
                r = v
                break
        else:
            break
        if K == 0 and i < n - 1:
            # descended with K remaining; when K hits 0 mid-walk something is off
            pass
    return occ, wm

def divergence_exact(N, n, W, m, P, iota):
    M = 1 << m
    occ, wm = exact_occ(N, n, W, M)
    assert sum(occ) == n * M, (sum(occ), n * M)
    D = -m + sum(o * it for o, it in zip(occ, iota)) / M
    return D, wm, occ

def partial_hist(N, n, W, w):
    A = len(W)
    den = cum(N[n], w)
    if den == 0:
        raise ValueError("empty")
    num = [cum(N[n - 1], w - W[a]) for a in range(A)]
    assert sum(num) == den
    return [Fraction(x, den) for x in num]

def divergence_approx(N, n, W, m, P, iota, w):
    Q = partial_hist(N, n, W, w)
    # -m + n * cross_entropy(Q, P)
    return -m + n * sum(float(q) * it for q, it in zip(Q, iota) if q > 0)

def multinomial(counts):
    n = sum(counts)
    r = 1
    rem = n
    for c in counts:
        r *= math.comb(rem, c)
        rem -= c
    return r

def kld(q, p):
    return sum(x * math.log2(x / y) for x, y in zip(q, p) if x > 0)

def n_type(P, n):
    K = len(P)
    counts = [math.floor(n * p) for p in P]
    rem = n - sum(counts)
    for _ in range(rem):
        best, bestD = None, None
        for a in range(K):
            c2 = counts[:]
            c2[a] += 1
            D = kld([c / n for c in c2], P)
            if bestD is None or D < bestD - 1e-15:
                best, bestD = a, D
        counts[best] += 1
    return counts

def ccdm_div(counts, P, iota, m=None):
    mn = multinomial(counts)
    if m is None:
        m = mn.bit_length() - 1  # floor(log2)
    return -m + sum(c * it for c, it in zip(counts, iota)), m

support = [1, 3, 5, 7]
v = mb_fit(support, 1.25)
P = mb(support, v)
iota = [-math.log2(p) for p in P]
print(f"v* = {v!r}  H = {entropy(P)!r}")
print(f"P = {P!r}")
print(f"iota = {iota!r}")

W = [a * a for a in support]
R = 1.25

print("\n--- SMDM exact curve (m = ceil(1.25 n)) ---")
smdm = {}
import sys
ns_exact = list(range(8, 52))
for n in ns_exact:
    m = math.ceil(R * n)
    N = dp_tables(n, W)
    D, wm, occ = divergence_exact(N, n, W, m, P, iota)
    Dwm = divergence_approx(N, n, W, m, P, iota, wm)
    Dwm1 = divergence_approx(N, n, W, m, P, iota, wm - 1)
    smdm[n] = (D / n, Dwm / n, Dwm1 / n)
    if n % 4 == 0 or n in (8, 51):
        print(f"n={n:3d} m={m:3d} D/n={D/n:.6f} approx(wm)={Dwm/n:.6f} approx(wm-1)={Dwm1/n:.6f}")
