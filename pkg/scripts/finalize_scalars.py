#!/usr/bin/env python3
"""Final adjudication run: freeze the Dirac scalars fixture.

q=1: exact decode (known).  q=i: best principled reconstruction over the two
delta-block readings and both off-diagonal assignments; reports per-config
best max distance and writes fixtures/dirac_scalars.json.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import numpy as np
from scipy.optimize import linear_sum_assignment, minimize

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from ncgq.fixtures import printed_spectrum, printed_translation_matrices
from ncgq.scalars import q_root


def to_np(tm):
    return np.array([[tm[(i, j)].to_complex() for j in range(16)] for i in range(16)])


R = printed_translation_matrices(q_root("i"))
Ra, Rb, Rbs, Rd = (to_np(R[n]) for n in ("alpha", "beta", "beta_star", "delta"))
I16 = np.eye(16)
REF = np.array(printed_spectrum("i"))
E = (np.sum(REF) + 32) / 16.0


def fit_config(B22, X12, X21, label, n_starts=250, seed=7):
    def build(x):
        d = complex(x[0], x[1])
        s12 = complex(x[2], x[3])
        s21 = complex(x[4], x[5])
        return np.block([
            [Ra - I16 + (E / 2 + d) * I16, X12 + s12 * I16],
            [X21 + s21 * I16, B22 - I16 + (E / 2 - d) * I16],
        ])

    def cost(x):
        eigs = np.linalg.eigvals(build(x))
        c = np.abs(eigs[:, None] - REF[None, :])
        rr, cc = linear_sum_assignment(c)
        return float(c[rr, cc].sum()), float(c[rr, cc].max())

    rng = np.random.default_rng(seed)
    best = None
    for _ in range(n_starts):
        x0 = rng.uniform(-2.5, 2.5, 6)
        if cost(x0)[0] > 30:
            continue
        r = minimize(lambda x: cost(x)[0], x0, method="Nelder-Mead",
                     options={"xatol": 1e-12, "fatol": 1e-12, "maxiter": 6000, "maxfev": 6000})
        if best is None or r.fun < best.fun:
            best = r
    r = minimize(lambda x: cost(x)[0], best.x, method="Nelder-Mead",
                 options={"xatol": 1e-15, "fatol": 1e-15, "maxiter": 60000, "maxfev": 60000})
    total, mx = cost(r.x)
    x = r.x
    print(f"{label}: total={total:.6g} max={mx:.6g}")
    print(f"   s11={E/2+complex(x[0],x[1]):.8f} s22={E/2-complex(x[0],x[1]):.8f}")
    print(f"   s12={complex(x[2],x[3]):.8f} s21={complex(x[4],x[5]):.8f}")
    return mx, x


def main():
    configs = [
        ("printed delta claim, (bstar|beta)", Rd, Rbs, Rb),
        ("printed delta claim, (beta|bstar)", Rd, Rb, Rbs),
        ("pair-symmetry delta = q^2 alpha, (bstar|beta)", -Ra, Rbs, Rb),
        ("pair-symmetry delta = q^2 alpha, (beta|bstar)", -Ra, Rb, Rbs),
    ]
    results = []
    for label, B22, X12, X21 in configs:
        mx, x = fit_config(B22, X12, X21, label)
        results.append((mx, label, x))
    results.sort(key=lambda t: t[0])
    mx, label, x = results[0]
    print(f"\nFROZEN q=i reconstruction: {label} (max {mx:.6g})")

    # q=1 exact decode
    s12_1 = 0.1
    s21_1 = 172.0 / 91.0

    payload = {
        "source": "reconstructed-from-printed-spectra",
        "version": 1,
        "note": (
            "Off-diagonal Dirac connection scalars. The reference table entries "
            "feeding these are corrupted; q=1 values are decoded exactly from the "
            "published q=1 list (block decomposition over joint characters), "
            "q=+/-i values are the best least-squares reconstruction (the "
            "published q=i list matches no reconstructible block operator to "
            "printing precision; see the audit report)."
        ),
        "q1_decode": {
            "s12": "1/10 exactly (all character families agree)",
            "s21": "172/91 (best rational within printing noise)",
        },
        "qi_fit": {"config": label, "max_match_distance": mx},
        "modes": {
            "1": {"s12": [s12_1, 0.0], "s21": [s21_1, 0.0]},
            "i": {"s12": [x[2], x[3]], "s21": [x[4], x[5]]},
            "-i": {"s12": [x[2], -x[3]], "s21": [x[4], -x[5]]},
        },
    }
    out = ROOT / "src" / "ncgq" / "fixtures" / "dirac_scalars.json"
    out.write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
