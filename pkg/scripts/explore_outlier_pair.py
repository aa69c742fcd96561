#!/usr/bin/env python3
"""Test the single-corrupted-pair hypothesis for the q=i reference list.

Refit the parity-odd structure minimizing the sum of the 30 smallest matched
distances (allowing one +- pair of the reference list to be an outlier); if
the trimmed residuals collapse to printing precision, the published list is
corrupted in exactly one pair and the underlying operator is recovered.
"""
from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
from scipy.optimize import linear_sum_assignment, minimize

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from ncgq.algebra import QuantumAlgebra, basis_monomials
from ncgq.fixtures import printed_spectrum, printed_translation_matrices
from ncgq.scalars import q_root

alg = QuantumAlgebra("i")
I16 = np.eye(16)
REF = np.array(printed_spectrum("i"))
S11 = complex(-5 / 17, 14 / 17)


def to_np(tm):
    return np.array([[tm[(i, j)].to_complex() for j in range(16)] for i in range(16)])


Ra = to_np(printed_translation_matrices(q_root("i"))["alpha"])


def right_mult_np(x):
    return np.array([[(alg.monomial(p, r) * x).coords()[i].to_complex()
                      for (p, r) in basis_monomials()] for i in range(16)])


RB0 = right_mult_np(alg.monomial(0, 1))
RB2 = right_mult_np(alg.monomial(2, 1))
RY0 = right_mult_np(alg.monomial(0, 3))
RY2 = right_mult_np(alg.monomial(2, 3))


def build(p, s11=S11, d=0.0):
    x0, x2, y0, y2, s12, s21 = p
    X12 = x0 * RB0 + x2 * RB2 + s12 * I16
    X21 = y0 * RY0 + y2 * RY2 + s21 * I16
    return np.block([
        [Ra - I16 + (s11 + d) * I16, X12],
        [X21, Ra - I16 + (s11 - d) * I16],
    ])


def trimmed_cost(p, k_keep=30):
    eigs = np.linalg.eigvals(build(p))
    c = np.abs(eigs[:, None] - REF[None, :])
    rr, cc = linear_sum_assignment(c)
    d = np.sort(c[rr, cc])
    return float(d[:k_keep].sum()), d


def main():
    rng = np.random.default_rng(31)
    best = None
    for trial in range(500):
        p = rng.normal(0, 1.2, 6) + 1j * rng.normal(0, 1.2, 6)
        r = minimize(lambda x: trimmed_cost(x[:6] + 1j * x[6:])[0],
                     np.concatenate([p.real, p.imag]), method="Nelder-Mead",
                     options={"xatol": 1e-12, "fatol": 1e-12, "maxiter": 6000, "maxfev": 6000})
        val = r.fun
        if best is None or val < best[0]:
            best = (val, r.x)
            print(f"trial {trial}: trimmed total = {val:.5g}")
        if val < 1e-3:
            break
    val, x = best
    p = x[:6] + 1j * x[6:]
    total, dists = trimmed_cost(p)
    print(f"\ntrimmed(30) total = {total:.6g}")
    print("all matched distances (sorted):")
    print("  " + "  ".join(f"{v:.4g}" for v in dists))
    names = ["x0", "x2", "y0", "y2", "s12", "s21"]
    for n, v in zip(names, p):
        print(f"  {n} = {v.real:+.8f}{v.imag:+.8f}i")


if __name__ == "__main__":
    main()
