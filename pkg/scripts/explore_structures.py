#!/usr/bin/env python3
"""Definitive q=i structure hunt via exact moment matching.

For each block structure
    D = [[B11 - I + s11 I, X12 + s12 I], [X21 + s21 I, B22 - I + s22 I]]
with B's in {Ra, Ra^T} and X's in {Rb, Rb^T, Rbs, Rbs^T}, the power sums
tr(D^k), k = 1, 2, 3 are (for fixed matrices) polynomial in
e = s11 + s22, w = (s11-1)(s22-1), u = s12 s21 only.  Solve them in closed
form against the printed list, then check k = 4..7; any survivor gets a
ratio scan for the full 32-eigenvalue match.
"""
from __future__ import annotations

import itertools
import sys
from pathlib import Path

import numpy as np
from scipy.optimize import linear_sum_assignment, minimize

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from ncgq.fixtures import printed_spectrum, printed_translation_matrices
from ncgq.scalars import q_root


def to_np(tm):
    return np.array([[tm[(i, j)].to_complex() for j in range(16)] for i in range(16)])


R = printed_translation_matrices(q_root("i"))
Ra, Rb, Rbs = (to_np(R[n]) for n in ("alpha", "beta", "beta_star"))
I = np.eye(16)
REF = np.array(printed_spectrum("i"))
TARGET = np.array([np.sum(REF ** k) for k in range(1, 8)])

BLOCKS = {"Ra": Ra, "RaT": Ra.T}
OFFS = {"Rb": Rb, "RbT": Rb.T, "Rbs": Rbs, "RbsT": Rbs.T}


def build(B11, B22, X12, X21, s11, s22, s12, s21):
    return np.block([
        [B11 - I + s11 * I, X12 + s12 * I],
        [X21 + s21 * I, B22 - I + s22 * I],
    ])


def solve_moments(B11, B22, X12, X21):
    """Closed-form (e, w, u) from k=1..3; returns (s11, s22, u) candidates."""
    N1 = B11 - I
    N2 = B22 - I
    t = {
        "N1": np.trace(N1), "N2": np.trace(N2),
        "N1N1": np.trace(N1 @ N1), "N2N2": np.trace(N2 @ N2),
        "N1c": np.trace(N1 @ N1 @ N1), "N2c": np.trace(N2 @ N2 @ N2),
        "XY": np.trace(X12 @ X21),
        "X": np.trace(X12), "Y": np.trace(X21),
        "N1XY": np.trace(N1 @ X12 @ X21),
        "N2YX": np.trace(N2 @ X21 @ X12),
        "N1X": np.trace(N1 @ X12), "N1Y": np.trace(X21 @ N1),
        "N2X": np.trace(X12 @ N2), "N2Y": np.trace(N2 @ X21),
    }
    # tr(D) = trN1 + trN2 + 16(s11+s22)
    e = (TARGET[0] - t["N1"] - t["N2"]) / 16.0
    # tr(D^2) = tr(N1^2)+tr(N2^2) + 2 s11 trN1 + 2 s22 trN2 + 16(s11^2+s22^2)
    #           + 2[tr(XY) + s12 trY + s21 trX + 16 u]
    # tr(D^3): blocks (N1+s11)^3 etc. + 3 tr((N1+s11)(X12+s12)(X21+s21))
    #           + 3 tr((N2+s22)(X21+s21)(X12+s12))
    # With trX = trY = trN1X = ... possibly nonzero, keep them symbolic in
    # s11, s22 but note s12, s21 appear only with their traces or as u.
    # Assume grading makes trX = trY = trN1X = N1Y = N2X = N2Y = 0 (check!).
    for key in ("X", "Y", "N1X", "N1Y", "N2X", "N2Y"):
        if abs(t[key]) > 1e-9:
            return None  # structure violates the grading assumption
    # k=2: 16(s11^2 + s22^2) + 2 s11 trN1 + 2 s22 trN2 + C2 + 32 u = P2
    # k=3: 16(s11^3+s22^3) + 3 s11^2 trN1 + 3 s11 trN1N1 + (same for 2) + trN1c + trN2c
    #      + 3[ trN1XY + s11 trXY + u trN1 + 16 s11 u ]
    #      + 3[ trN2YX + s22 trXY + u trN2 + 16 s22 u ] = P3
    # Using trN1 = trN2 = -16, trN1N1 = trN2N2 = 16, trN1c = trN2c = -16 for Ra-blocks:
    # verify numerically instead of assuming:
    a1, a2 = t["N1"], t["N2"]
    b1, b2 = t["N1N1"], t["N2N2"]
    c1, c2 = t["N1c"], t["N2c"]
    P1, P2, P3 = TARGET[0], TARGET[1], TARGET[2]
    # s11^2+s22^2 = e^2 - 2m where m = s11 s22
    # k=2 -> 16(e^2 - 2m) + 2 a1 s11 + 2 a2 s22 + (b1 + b2) + 2 t_XY + 32 u = P2
    # if a1 == a2 the linear term is a1 * 2e and m, u merge into one unknown pair
    if abs(a1 - a2) > 1e-9:
        return None  # would need k>=4 to separate; not the case here
    A = a1
    # eq2: -32 m + 32 u = P2 - 16 e^2 - 2 A e - (b1 + b2) - 2 t_XY  =: K2
    K2 = P2 - 16 * e ** 2 - 2 * A * e - (b1 + b2) - 2 * t["XY"]
    # k=3: 16(e^3 - 3 m e) + 3 A (e^2 - 2m) + 3 b1' ... careful: 3 s11^2 a1 + 3 s22^2 a2 = 3A(e^2-2m)
    #      + 3 (b1 s11 + b2 s22): b1 == b2 -> 3 b1 e
    if abs(b1 - b2) > 1e-9 or abs(c1 - c2) > 1e-9:
        return None
    # cross: 3[trN1XY + trN2YX] + 3 t_XY e + 3 u (a1 + a2) + 48 u e
    K3 = (P3 - 16 * e ** 3 - 3 * A * e ** 2 - 3 * b1 * e - (c1 + c2)
          - 3 * (t["N1XY"] + t["N2YX"]) - 3 * t["XY"] * e)
    # remaining: -48 m e + 6 A m ... wait: -3A*2m = -6Am; 16*(-3 m e) = -48 m e
    # eq3: (-48 e - 6 A) m + (3 (a1 + a2) + 48 e) u = K3
    M = np.array([[-32.0, 32.0], [-48 * e - 6 * A, 3 * (a1 + a2) + 48 * e]], dtype=complex)
    rhs = np.array([K2, K3], dtype=complex)
    try:
        m, u = np.linalg.solve(M, rhs)
    except np.linalg.LinAlgError:
        return None
    # s11, s22 = roots of z^2 - e z + m
    disc = np.sqrt(e * e - 4 * m + 0j)
    s11 = (e + disc) / 2
    s22 = (e - disc) / 2
    return s11, s22, u


def check_structure(names, mats):
    out = solve_moments(*mats)
    if out is None:
        return None
    s11, s22, u = out
    ps = np.array([np.sum(np.linalg.eigvals(build(*mats, s11, s22, 1.0, u)) ** k)
                   for k in range(1, 8)])
    err47 = max(abs(ps[k] - TARGET[k]) / max(1.0, abs(TARGET[k])) for k in range(3, 7))
    return s11, s22, u, err47


def full_match(mats, s11, s22, u):
    def cost(z):
        d = build(*mats, s11, s22, z, u / z)
        eigs = np.linalg.eigvals(d)
        c = np.abs(eigs[:, None] - REF[None, :])
        r, col = linear_sum_assignment(c)
        return float(c[r, col].sum()), float(c[r, col].max())

    best = None
    for lr in np.linspace(-1.5, 1.5, 31):
        for ph in np.linspace(-np.pi, np.pi, 61):
            z = 10.0 ** lr * np.exp(1j * ph)
            tt, _ = cost(z)
            if best is None or tt < best[0]:
                best = (tt, z)
    _, z0 = best

    def obj(xx):
        z = complex(xx[0], xx[1])
        return 1e9 if abs(z) < 1e-9 else cost(z)[0]

    r = minimize(obj, [z0.real, z0.imag], method="Nelder-Mead",
                 options={"xatol": 1e-14, "fatol": 1e-14, "maxiter": 50000, "maxfev": 50000})
    z = complex(r.x[0], r.x[1])
    return z, *cost(z)


def main():
    results = []
    for (n11, B11), (n22, B22) in itertools.product(BLOCKS.items(), BLOCKS.items()):
        for (n12, X12), (n21, X21) in itertools.product(OFFS.items(), OFFS.items()):
            res = check_structure((n11, n22, n12, n21), (B11, B22, X12, X21))
            if res is None:
                continue
            s11, s22, u, err47 = res
            results.append((err47, (n11, n22, n12, n21), s11, s22, u))
    results.sort(key=lambda r: r[0])
    for err47, names, s11, s22, u in results[:10]:
        print(f"k4-7 relerr {err47:.3g}  blocks {names}  s11={s11:.4f} s22={s22:.4f} u={u:.4f}")
    print()
    for err47, names, s11, s22, u in results[:3]:
        if err47 > 1e-3:
            continue
        mats = (BLOCKS[names[0]], BLOCKS[names[1]], OFFS[names[2]], OFFS[names[3]])
        z, total, mx = full_match(mats, s11, s22, u)
        print(f"blocks {names}: s12={z:.8f} s21={u/z:.8f} total={total:.6g} max={mx:.6g}")
        print(f"   s11*17 = {s11*17:.6f}  s22*17 = {s22*17:.6f}  u = {u:.8f}")


if __name__ == "__main__":
    main()
