#!/usr/bin/env python3
"""Second-round convention search: adds overall sign variants and prints solutions.

Family spec = (table, transpose, side, sign): equation  d e_i + sign * sum = 0.
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
TABLES = {"adR": evaluate_ad_table(AD_R_PRINTED, q), "adL": evaluate_ad_table(AD_L_PRINTED, q)}
LAMBDA2 = [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]
UNKNOWNS = [(i, j) for i in FORMS for j in FORMS]

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


def de_coords(i):
    df = cal.exterior_d(cal.basis_form(i), normalized=True)
    return {(w[0], w[1]): el.counit() for w, el in df.terms.items()}


def wedge_pair(x, y):
    return {(w[0], w[1]): c for w, c in cal.exterior.reduce_word((x, y)).items()}


def family_rows(i, spec):
    name, transpose, side, sign = spec
    table = TABLES[name]
    coeff = {}
    for (j, k), c in table[i].items():
        if transpose:
            j, k = k, j
        c = c if sign > 0 else -c
        for m in FORMS:
            red = wedge_pair(m, k) if side == "left" else wedge_pair(j, m)
            unk = (j, m) if side == "left" else (k, m)
            for w, sc in red.items():
                d = coeff.setdefault(w, {})
                d[unk] = d.get(unk, ZERO) + c * sc
    rhs = de_coords(i)
    rows = []
    for w in LAMBDA2:
        row = [coeff.get(w, {}).get(u, ZERO) for u in UNKNOWNS]
        const = rhs.get(w, ZERO)
        if any(row) or const:
            rows.append((row, -const))
    return rows


def solve(rows):
    a = [r for r, _ in rows]
    b = [c for _, c in rows]
    try:
        return "unique", dict(zip(UNKNOWNS, linalg.solve_unique(a, b, ZERO)))
    except linalg.InconsistentSystem as e:
        return f"inconsistent(r{e.rank})", None
    except linalg.UnderdeterminedSystem as e:
        return f"underdet(r{e.rank})", None


def score(sol):
    return -1 if sol is None else sum(1 for k, v in ANCHORS.items() if sol[k] == v)


def label(spec):
    n, tr, s, sg = spec
    return f"{n}{'T' if tr else ''}/{s}/{'+' if sg > 0 else '-'}"


def main():
    specs = [(n, tr, s, sg) for n in TABLES for tr in (0, 1) for s in ("left", "right") for sg in (1, -1)]

    print("== single families (unique only) ==")
    singles = {}
    for sp in specs:
        rows = []
        for i in FORMS:
            rows += family_rows(i, sp)
        status, sol = solve(rows)
        if sol is not None:
            singles[label(sp)] = sol
            print(f"{label(sp):>16}: anchors={score(sol)}")
            for k in UNKNOWNS:
                mark = "==" if (k in ANCHORS and sol[k] == ANCHORS[k]) else ("!=" if k in ANCHORS else "  ")
                print(f"        A_{k[0]}^{k[1]} = {str(sol[k]):>24} {mark}")

    print("== pairs (consistent only) ==")
    found = []
    for sp1, sp2 in itertools.combinations(specs, 2):
        rows = []
        for i in FORMS:
            rows += family_rows(i, sp1)
            rows += family_rows(i, sp2)
        status, sol = solve(rows)
        if sol is not None:
            found.append((score(sol), label(sp1), label(sp2)))
    found.sort(reverse=True)
    for sc, l1, l2 in found[:20]:
        print(f"  anchors={sc}: {l1} + {l2}")
    if not found:
        print("  none consistent")


if __name__ == "__main__":
    main()
