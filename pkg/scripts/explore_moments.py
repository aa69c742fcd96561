#!/usr/bin/env python3
"""Solve for the q=i Dirac scalars from the printed power sums.

With the block structure fixed, tr(D^k) for k <= 7 depends on the scalars only
through e = s11 + s22, w-like symmetric functions of (s11, s22), and the
product u = s12 s21 (a grading argument).  Use printed power sums k = 1..3 to
solve for (s11, s22, u) by Newton iteration, cross-check k = 4..7, then scan
the ratio direction for the full match.
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


MODE = "i"
R = printed_translation_matrices(q_root(MODE))
Ra, Rb, Rbs, Rd = (to_np(R[n]) for n in ("alpha", "beta", "beta_star", "delta"))
I = np.eye(16)
REF = np.array(printed_spectrum(MODE))


def build(s11, s22, s12, s21):
    return np.block([
        [Ra - I + s11 * I, Rbs + s12 * I],
        [Rb + s21 * I, Rd - I + s22 * I],
    ])


def power_sums(eigs, kmax):
    return np.array([np.sum(eigs ** k) for k in range(1, kmax + 1)])


def model_power_sums(s11, s22, s12, s21, kmax):
    return power_sums(np.linalg.eigvals(build(s11, s22, s12, s21)), kmax)


def main():
    target = power_sums(REF, 7)
    print("printed power sums:")
    for k, v in enumerate(target, 1):
        print(f"  k={k}: {v:.6f}")

    # Newton solve on (s11, s22, u) using k = 1..3, with s12 = 1, s21 = u
    # (the k<=3 sums depend only on the product).
    x = np.array([-14 / 17 + 12j / 17, 4 / 17 + 16j / 17, 4.554 + 2.844j], dtype=complex)

    def F(x):
        s11, s22, u = x
        ps = model_power_sums(s11, s22, 1.0 + 0j, u, 3)
        return ps - target[:3]

    for it in range(60):
        f = F(x)
        if np.max(np.abs(f)) < 1e-12:
            break
        J = np.zeros((3, 3), dtype=complex)
        h = 1e-7
        for j in range(3):
            dx = np.zeros(3, dtype=complex)
            dx[j] = h
            J[:, j] = (F(x + dx) - f) / h
        x = x - np.linalg.solve(J, f)
    s11, s22, u = x
    print(f"\nsolved: s11 = {s11:.8f}")
    print(f"        s22 = {s22:.8f}")
    print(f"        u   = {u:.8f}")
    print(f"x17: s11*17 = {s11*17:.6f}, s22*17 = {s22*17:.6f}")
    print(f"residual k=1..3: {np.abs(F(x))}")

    ps = model_power_sums(s11, s22, 1.0 + 0j, u, 7)
    print("\ncross-check k=4..7 (model vs printed):")
    for k in range(4, 8):
        print(f"  k={k}: model {ps[k-1]:.5f}  printed {target[k-1]:.5f}  diff {abs(ps[k-1]-target[k-1]):.3g}")

    # ratio scan with the solved parameters
    def cost(s12, s21):
        eigs = np.linalg.eigvals(build(s11, s22, s12, s21))
        c = np.abs(eigs[:, None] - REF[None, :])
        r, col = linear_sum_assignment(c)
        return float(c[r, col].sum()), float(c[r, col].max())

    best = None
    for lr in np.linspace(-1.5, 1.5, 31):
        for ph in np.linspace(-np.pi, np.pi, 61):
            z = 10.0 ** lr * np.exp(1j * ph)
            t, _ = cost(z, u / z)
            if best is None or t < best[0]:
                best = (t, z)
    t0, z0 = best

    def obj(xx):
        z = complex(xx[0], xx[1])
        if abs(z) < 1e-9:
            return 1e9
        return cost(z, u / z)[0]

    r = minimize(obj, [z0.real, z0.imag], method="Nelder-Mead",
                 options={"xatol": 1e-14, "fatol": 1e-14, "maxiter": 50000, "maxfev": 50000})
    z = complex(r.x[0], r.x[1])
    total, mx = cost(z, u / z)
    print(f"\nratio scan + polish: s12 = {z.real:.10f}{z.imag:+.10f}i")
    print(f"                     s21 = {(u/z).real:.10f}{(u/z).imag:+.10f}i")
    print(f"total = {total:.6g}, max = {mx:.6g}")


if __name__ == "__main__":
    main()
