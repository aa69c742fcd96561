#!/usr/bin/env python3
"""Determine the off-diagonal scalar product from power sums, then scan the ratio.

By the grading of the translation matrices, tr(D^k) for low k depends on the
off-diagonal scalars only through u = s12*s21:

    tr(D^2) = 16[(s11-1)^2 + (s22-1)^2] + 2 tr(X12 X21) + 32 u

so the printed eigenvalue list pins u directly.  The remaining ratio freedom
is a near-gauge direction; scan it on a grid and polish.
"""
from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
from scipy.optimize import linear_sum_assignment, minimize

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from ncgq.fixtures import printed_spectrum, printed_translation_matrices
from ncgq.scalars import q_root


def to_np(tm):
    return np.array([[tm[(i, j)].to_complex() for j in range(16)] for i in range(16)])


def analyze(mode: str, s11: complex, s22: complex):
    R = printed_translation_matrices(q_root(mode))
    Ra, Rb, Rbs, Rd = (to_np(R[n]) for n in ("alpha", "beta", "beta_star", "delta"))
    I = np.eye(16)
    ref = np.array(printed_spectrum(mode))

    sum2 = np.sum(ref ** 2)
    t_cross = np.trace(Rbs @ Rb)
    u = (sum2 - 16 * (s11 - 1) ** 2 - 16 * (s22 - 1) ** 2 - 2 * t_cross) / 32
    print(f"[q={mode}] tr(X12 X21) = {t_cross:.6g};  u = s12*s21 = {u:.8f}")

    def build(s12, s21):
        return np.block([
            [Ra - I + s11 * I, Rbs + s12 * I],
            [Rb + s21 * I, Rd - I + s22 * I],
        ])

    def cost(s12, s21):
        eigs = np.linalg.eigvals(build(s12, s21))
        c = np.abs(eigs[:, None] - ref[None, :])
        r, col = linear_sum_assignment(c)
        return float(c[r, col].sum()), float(c[r, col].max())

    # scan s12 = z, s21 = u/z over a log-polar grid
    best = None
    for lr in np.linspace(-1.2, 1.2, 25):
        for ph in np.linspace(-np.pi, np.pi, 49):
            z = 10.0 ** lr * np.exp(1j * ph)
            t, _ = cost(z, u / z)
            if best is None or t < best[0]:
                best = (t, z)
    t0, z0 = best
    print(f"  ratio scan best: s12 = {z0:.6f}, total = {t0:.6g}")

    def obj(x):
        z = complex(x[0], x[1])
        if abs(z) < 1e-9:
            return 1e9
        return cost(z, u / z)[0]

    r = minimize(obj, [z0.real, z0.imag], method="Nelder-Mead",
                 options={"xatol": 1e-14, "fatol": 1e-14, "maxiter": 40000, "maxfev": 40000})
    z = complex(r.x[0], r.x[1])
    total, mx = cost(z, u / z)
    print(f"  polished: s12 = {z.real:.10f}{z.imag:+.10f}i")
    print(f"            s21 = {(u/z).real:.10f}{(u/z).imag:+.10f}i")
    print(f"  total = {total:.6g}, max = {mx:.6g}")

    # free 4-parameter polish from that point
    def obj4(x):
        return cost(complex(x[0], x[1]), complex(x[2], x[3]))[0]

    r4 = minimize(obj4, [z.real, z.imag, (u / z).real, (u / z).imag], method="Nelder-Mead",
                  options={"xatol": 1e-14, "fatol": 1e-14, "maxiter": 60000, "maxfev": 60000})
    s12 = complex(r4.x[0], r4.x[1]); s21 = complex(r4.x[2], r4.x[3])
    total, mx = cost(s12, s21)
    print(f"  free polish: s12 = {s12.real:.10f}{s12.imag:+.10f}i  s21 = {s21.real:.10f}{s21.imag:+.10f}i")
    print(f"  product = {s12*s21:.8f}; total = {total:.6g}, max = {mx:.6g}")
    return s12, s21


def main():
    print("== q = 1 ==")
    analyze("1", 4.0 + 0j, 6.0 + 0j)
    print("== q = i, diagonal split (V1, V2) ==")
    analyze("i", complex(-14 / 17, 12 / 17), complex(4 / 17, 16 / 17))
    print("== q = i, diagonal split (V2, V1) ==")
    analyze("i", complex(4 / 17, 16 / 17), complex(-14 / 17, 12 / 17))


if __name__ == "__main__":
    main()
