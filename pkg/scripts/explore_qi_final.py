#!/usr/bin/env python3
"""Targeted q=i fits: diagonal split and off-diagonal block pairing variants."""
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


R = printed_translation_matrices(q_root("i"))
Ra, Rb, Rbs, Rd = (to_np(R[n]) for n in ("alpha", "beta", "beta_star", "delta"))
I = np.eye(16)
REF = np.array(printed_spectrum("i"))

V1 = complex(-14 / 17, 12 / 17)   # value of the (1,1)-block formula from the reference table
V2 = complex(4 / 17, 16 / 17)     # value of the (2,2)-block formula


def cost(mat):
    eigs = np.linalg.eigvals(mat)
    c = np.abs(eigs[:, None] - REF[None, :])
    r, col = linear_sum_assignment(c)
    return float(c[r, col].sum()), float(c[r, col].max())


def fit(sigma1, sigma2, X12, X21, label):
    def build(x):
        s12 = complex(x[0], x[1])
        s21 = complex(x[2], x[3])
        return np.block([
            [Ra - I + sigma1 * I, X12 + s12 * I],
            [X21 + s21 * I, Rd - I + sigma2 * I],
        ])

    def obj(x):
        return cost(build(x))[0]

    rng = np.random.default_rng(5)
    best = None
    for k in range(200):
        x0 = rng.uniform(-3.0, 3.0, size=4)
        if obj(x0) > 22:
            continue
        r = minimize(obj, x0, method="Nelder-Mead",
                     options={"xatol": 1e-12, "fatol": 1e-12, "maxiter": 5000, "maxfev": 5000})
        if best is None or r.fun < best.fun:
            best = r
        if best.fun < 1e-4:
            break
    r = minimize(obj, best.x, method="Nelder-Mead",
                 options={"xatol": 1e-15, "fatol": 1e-15, "maxiter": 40000, "maxfev": 40000})
    total, mx = cost(build(r.x))
    s12 = complex(r.x[0], r.x[1]); s21 = complex(r.x[2], r.x[3])
    print(f"{label}: total={total:.6g} max={mx:.6g}")
    print(f"   s12 = {s12.real:.10f}{s12.imag:+.10f}i   *17 = {s12*17}")
    print(f"   s21 = {s21.real:.10f}{s21.imag:+.10f}i   *17 = {s21*17}")


def main():
    fit(V1, V2, Rbs, Rb, "diag (V1,V2), offdiag (Rbs, Rb)")
    fit(V1, V2, Rb, Rbs, "diag (V1,V2), offdiag (Rb, Rbs)")
    fit(V2, V1, Rbs, Rb, "diag (V2,V1), offdiag (Rbs, Rb)")
    fit(V2, V1, Rb, Rbs, "diag (V2,V1), offdiag (Rb, Rbs)")


if __name__ == "__main__":
    main()
