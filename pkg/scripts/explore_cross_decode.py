#!/usr/bin/env python3
"""Decode the q=i spectrum assuming the commuting 2x2-block structure.

Hypothesis: the q=i matrix block-decomposes over joint (a, b) character pairs
(a^4 = b^4 = 1) as [[a-1+s11, (a-1)b^3 + s12],[b + s21, -a-1+s22]], giving

    lambda = S0/2 +- sqrt(Delta(a,b)),
    Delta(a,b) = (a+d)^2 + (a-1) + s21 (a-1) b^3 + s12 b + u.

The four a=1 values form a cross z0 + s12 * {1, i, -1, -i}.  Hunt crosses in
the shifted squares, then solve the linear system for all parameters and
verify the full 16-point multiset.
"""
from __future__ import annotations

import itertools
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from ncgq.fixtures import printed_spectrum

REF = np.array(printed_spectrum("i"))
S0 = complex(-44 / 17, 28 / 17)

# pair the eigenvalues into +-kappa pairs
vals = list(REF)
pairs = []
used = [False] * 32
for i in range(32):
    if used[i]:
        continue
    best = None
    for j in range(i + 1, 32):
        if used[j]:
            continue
        err = abs(vals[i] + vals[j] - S0)
        if best is None or err < best[0]:
            best = (err, j)
    err, j = best
    used[i] = used[j] = True
    pairs.append((vals[i], vals[j], err))

print("pairing errors:", max(p[2] for p in pairs))
kappa2 = np.array([((p[0] - p[1]) / 2) ** 2 for p in pairs])
for k2 in sorted(kappa2, key=lambda z: (z.real, z.imag)):
    print(f"  kappa^2 = {k2:.6f}")

# hunt 4-point crosses: subsets {z0 + w, z0 + iw, z0 - w, z0 - iw}
# signature: the four points have two perpendicular equal-length diagonals
# through a common center: centers of both diagonals coincide; offsets i-rotated.
found = []
for quad in itertools.combinations(range(16), 4):
    pts = kappa2[list(quad)]
    # try all ways to split into two diagonal pairs
    for (i1, i2, i3, i4) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)]:
        c1 = (pts[i1] + pts[i2]) / 2
        c2 = (pts[i3] + pts[i4]) / 2
        if abs(c1 - c2) > 2e-4:
            continue
        w1 = (pts[i1] - pts[i2]) / 2
        w2 = (pts[i3] - pts[i4]) / 2
        if abs(abs(w1) - abs(w2)) > 2e-4:
            continue
        # perpendicular?
        if abs((w1 * np.conj(w2)).real) > 3e-4 * abs(w1) * abs(w2) + 1e-8:
            continue
        found.append((quad, c1, abs(w1)))
print(f"\ncross candidates: {len(found)}")
for quad, c, w in found:
    print(f"  indices {quad}: center {c:.6f}, |offset| {w:.6f}")
