#!/usr/bin/env python3
"""Moment solve, round 2: use tr(K^2) + tr(K^6), check tr(K^4) and tr(K^8)."""
from __future__ import annotations

import itertools
import math
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
I16 = np.eye(16)
REF = np.array(printed_spectrum("i"))


def analyze(b22_sign: int, X12, X21, names):
    # D = [[Ra - I + s11, X12 + s12],[X21 + s21, sgn*Ra - I + s22]]
    # moments of D directly (no symmetry assumption): polynomial in
    # (d, u) after fixing e from k=1 (even powers of d only if sgn=-1;
    # keep general: fit in both d and u).
    e = (np.sum(REF) + 32) / 16.0

    def build(d, s12, s21):
        return np.block([
            [Ra - I16 + (e / 2 + d) * I16, X12 + s12 * I16],
            [b22_sign * Ra - I16 + (e / 2 - d) * I16, X21 + s21 * I16][::-1][0] * 0
            + np.zeros((16, 16)),  # placeholder, replaced below
        ]) if False else np.block([
            [Ra - I16 + (e / 2 + d) * I16, X12 + s12 * I16],
            [X21 + s21 * I16, b22_sign * Ra - I16 + (e / 2 - d) * I16],
        ])

    target = {k: np.sum(REF ** k) for k in (2, 4, 6, 8)}

    def tr_k(d, u, k):
        m = build(d, 1.0, u)
        return np.trace(np.linalg.matrix_power(m, k))

    # fit tr(D^k) as polynomial in (d, u), degrees: k=2 -> (2,1); 4 -> (4,2); 6 -> (6,3); 8 -> (8,4)
    def fit_poly(k, dd, du):
        rng = np.random.default_rng(17 + k)
        keys = [(i, j) for i in range(dd + 1) for j in range(du + 1)]
        pts, vals = [], []
        for _ in range(2 * len(keys)):
            d = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            u = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            pts.append((d, u))
            vals.append(tr_k(d, u, k))
        A = np.array([[d ** i * u ** j for (i, j) in keys] for d, u in pts])
        coef, *_ = np.linalg.lstsq(A, np.array(vals), rcond=None)
        coef = {key: c for key, c in zip(keys, coef) if abs(c) > 1e-6}
        return coef

    p2 = fit_poly(2, 2, 1)
    p6 = fit_poly(6, 6, 3)
    p4 = fit_poly(4, 4, 2)

    # k=2: c00 + c10 d + c20 d^2 + c01 u = T2 -> u(d)
    c01 = p2.get((0, 1), 0)
    if abs(c01) < 1e-9:
        return
    def u_of_d(d):
        acc = target[2] - p2.get((0, 0), 0) - p2.get((1, 0), 0) * d - p2.get((2, 0), 0) * d * d
        return acc / c01

    # k=6 residual as function of d: polynomial (degree <= 6); find roots numerically
    def r6(d):
        u = u_of_d(d)
        return sum(c * d ** i * u ** j for (i, j), c in p6.items()) - target[6]

    # sample and root-find: fit univariate polynomial of degree 6 in d
    rng = np.random.default_rng(99)
    xs = [complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(16)]
    Avan = np.array([[x ** n for n in range(7)] for x in xs])
    coef, *_ = np.linalg.lstsq(Avan, np.array([r6(x) for x in xs]), rcond=None)
    roots = np.roots(coef[::-1])

    print(f"== B22 = {'+' if b22_sign>0 else '-'}Ra, off={names} ==")
    for d in roots:
        u = u_of_d(d)
        r4 = sum(c * d ** i * u ** j for (i, j), c in p4.items()) - target[4]
        if abs(r4) > 5.0:
            continue
        m = build(d, 1.0, u)
        r8 = np.trace(np.linalg.matrix_power(m, 8)) - target[8]
        print(f"  d={d:.6f} u={u:.6f} |r4|={abs(r4):.3g} |r8|={abs(r8):.3g}")
        if abs(r4) > 0.5 or abs(r8) > 50:
            continue

        def cost(z):
            mm = build(d, z, u / z)
            eigs = np.linalg.eigvals(mm)
            c = np.abs(eigs[:, None] - REF[None, :])
            rr, cc = linear_sum_assignment(c)
            return float(c[rr, cc].sum()), float(c[rr, cc].max())

        best = None
        for lr in np.linspace(-1.5, 1.5, 25):
            for ph in np.linspace(-np.pi, np.pi, 49):
                z = 10.0 ** lr * np.exp(1j * ph)
                t, _ = cost(z)
                if best is None or t < best[0]:
                    best = (t, z)
        _, z0 = best
        r = minimize(lambda x: 1e9 if abs(complex(x[0], x[1])) < 1e-9
                     else cost(complex(x[0], x[1]))[0],
                     [z0.real, z0.imag], method="Nelder-Mead",
                     options={"xatol": 1e-15, "fatol": 1e-15, "maxiter": 60000, "maxfev": 60000})
        z = complex(r.x[0], r.x[1])
        total, mx = cost(z)
        print(f"    FULL: total={total:.6g} max={mx:.6g}")
        print(f"    s11={e/2+d:.8f} s22={e/2-d:.8f} s12={z:.8f} s21={u/z:.8f}")
        print(f"    x17: s11={17*(e/2+d):.5f} s22={17*(e/2-d):.5f} s12={17*z:.5f} s21={17*u/z:.5f}")


def main():
    for sign in (-1, 1):
        for names, (X12, X21) in {
            ("Rbs", "Rb"): (Rbs, Rb),
            ("Rb", "Rbs"): (Rb, Rbs),
        }.items():
            analyze(sign, X12, X21, names)


if __name__ == "__main__":
    main()
