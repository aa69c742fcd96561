#!/usr/bin/env python3
"""Enumerate torsion/cotorsion assembly conventions and solve each exactly.

For every combination of (structure-constant table, index transpose, side of
the connection form) for the two equation families, assemble the linear system
for the 16 connection coefficients at q = i, solve it exactly, and score the
solution against the anchor values of the reference table:

    A_a^a = A_d^d = (-3+5i)/17     A_d^a = A_a^d = (4+16i)/17
    A_c^c = (2-9i)/17              A_b^b = (-11+7i)/17
    A_b^a = A_b^c = A_b^d = 0

Also prints solutions for single-family systems.
"""
from __future__ import annotations

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from ncgq import linalg
from ncgq.algebra import QuantumAlgebra
from ncgq.calculus import Calculus, FORMS
from ncgq.constants import AD_L_PRINTED, AD_R_PRINTED, evaluate_ad_table
from ncgq.scalars import GaussianRational, ONE, ZERO

alg = QuantumAlgebra("i")
cal = Calculus(alg)
q = alg.q

ADR = evaluate_ad_table(AD_R_PRINTED, q)
ADL = evaluate_ad_table(AD_L_PRINTED, q)

LAMBDA2 = [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]
UNKNOWNS = [(i, j) for i in FORMS for j in FORMS]  # A_i^j


def de_coords(i: str) -> dict[tuple[str, str], GaussianRational]:
    df = cal.exterior_d(cal.basis_form(i), normalized=True)
    out = {}
    for w, el in df.terms.items():
        out[(w[0], w[1])] = el.counit()
    return out


def wedge_pair(x: str, y: str) -> dict[tuple[str, str], GaussianRational]:
    red = cal.exterior.reduce_word((x, y))
    return {(w[0], w[1]): c for w, c in red.items()}


def family_rows(i: str, table, transpose: bool, side: str):
    """Rows (one per Lambda^2 coordinate) of 'd e_i + sum c X_jk = 0'."""
    coeff_on_unknown: dict[tuple[str, str], dict[tuple[str, str], GaussianRational]] = {}
    for (j, k), c in table[i].items():
        if transpose:
            j, k = k, j
        for m in FORMS:
            if side == "left":  # A_j /\ e_k : unknown (j, m) against e_m /\ e_k
                red = wedge_pair(m, k)
                unk = (j, m)
            else:  # e_j /\ A_k : unknown (k, m) against e_j /\ e_m
                red = wedge_pair(j, m)
                unk = (k, m)
            for w, s in red.items():
                d = coeff_on_unknown.setdefault(w, {})
                d[unk] = d.get(unk, ZERO) + c * s
    rhs = de_coords(i)
    rows = []
    for w in LAMBDA2:
        row = [coeff_on_unknown.get(w, {}).get(u, ZERO) for u in UNKNOWNS]
        const = rhs.get(w, ZERO)
        if any(row) or const:
            rows.append((row, -const))  # sum c*A = -de
    return rows


ANCHORS = {
    ("a", "a"): GaussianRational("-3/17", "5/17"),
    ("d", "d"): GaussianRational("-3/17", "5/17"),
    ("d", "a"): GaussianRational("4/17", "16/17"),
    ("a", "d"): GaussianRational("4/17", "16/17"),
    ("c", "c"): GaussianRational("2/17", "-9/17"),
    ("b", "b"): GaussianRational("-11/17", "7/17"),
    ("b", "a"): ZERO,
    ("b", "c"): ZERO,
    ("b", "d"): ZERO,
}


def solve(rows):
    a = [r for r, _ in rows]
    b = [c for _, c in rows]
    try:
        x = linalg.solve_unique(a, b, ZERO)
        return "unique", dict(zip(UNKNOWNS, x))
    except linalg.InconsistentSystem as e:
        return f"inconsistent(rank {e.rank})", None
    except linalg.UnderdeterminedSystem as e:
        return f"underdetermined(rank {e.rank})", None


def score(sol):
    if sol is None:
        return -1
    return sum(1 for k, v in ANCHORS.items() if sol[k] == v)


def describe(tbl_name, transpose, side):
    t = "T" if transpose else ""
    return f"{tbl_name}{t}/{side}"


def main():
    tables = {"adR": ADR, "adL": ADL}
    options = [(n, tr, s) for n in tables for tr in (False, True) for s in ("left", "right")]

    print("== single families ==")
    for n, tr, s in options:
        rows = []
        for i in FORMS:
            rows += family_rows(i, tables[n], tr, s)
        status, sol = solve(rows)
        sc = score(sol)
        print(f"{describe(n,tr,s):>12}: {status}  anchors={sc if sol else '-'}")
        if sol and sc >= 7:
            for k in UNKNOWNS:
                print(f"      A_{k[0]}^{k[1]} = {sol[k]}")

    print("== paired families ==")
    best = []
    for (n1, t1, s1), (n2, t2, s2) in itertools.product(options, options):
        if (n1, t1, s1) >= (n2, t2, s2):
            continue
        rows = []
        for i in FORMS:
            rows += family_rows(i, tables[n1], t1, s1)
            rows += family_rows(i, tables[n2], t2, s2)
        status, sol = solve(rows)
        sc = score(sol)
        if sol is not None:
            best.append((sc, describe(n1, t1, s1), describe(n2, t2, s2), status, sol))
    best.sort(key=lambda t: -t[0])
    for sc, d1, d2, status, sol in best[:12]:
        print(f"anchors={sc:2d}  {d1} + {d2}  ({status})")
    if best:
        sc, d1, d2, status, sol = best[0]
        print(f"-- best pair {d1} + {d2}: anchors={sc}")
        for k in UNKNOWNS:
            mark = ""
            if k in ANCHORS:
                mark = "  == anchor" if sol[k] == ANCHORS[k] else f"  != anchor {ANCHORS[k]}"
            print(f"   A_{k[0]}^{k[1]} = {sol[k]}{mark}")


if __name__ == "__main__":
    main()
