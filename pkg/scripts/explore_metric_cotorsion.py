#!/usr/bin/env python3
"""Test metric-based cotorsion assembly and printed-value consistency.

Families:
  T[tbl]        : d e_i + sum ad(jk|i) A_j /\ e_k = 0
  Cdisp[tbl]    : d e_i + sum ad(jk|i) e_j /\ A_k = 0
  Cmet[tbl]     : sum_j eta^{jt} d e_j + sum_{jkm} eta^{jk} ad(mt|k) e_j /\ A_m = 0
                  (cotorsion assembled from the printed metric and nabla = -sum ad A (x) e)

For each family/pair: (1) substitute the 13 printed connection values and test
exact consistency in the remaining unknowns (ca, cb, db); (2) solve the full
16-unknown system.
"""
from __future__ import annotations

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from ncgq import linalg
from ncgq.algebra import QuantumAlgebra
from ncgq.calculus import Calculus, FORMS
from ncgq.constants import (AD_L_PRINTED, AD_R_PRINTED, RHO, TWO_Q,
                            evaluate_ad_table, evaluate_connection_printed)
from ncgq.scalars import GaussianRational, ONE, ZERO

alg = QuantumAlgebra("i")
cal = Calculus(alg)
q = alg.q
TABLES = {"adR": evaluate_ad_table(AD_R_PRINTED, q), "adL": evaluate_ad_table(AD_L_PRINTED, q)}
LAMBDA2 = [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]
UNKNOWNS = [(i, j) for i in FORMS for j in FORMS]

PRINTED = evaluate_connection_printed(q)  # 13 entries (9 + 4 proof zeros)
FREE = [("c", "a"), ("c", "b"), ("d", "b")]


def metric_coefficients() -> dict[tuple[str, str], GaussianRational]:
    inv2 = TWO_Q.evaluate_at(q).inverse()
    rho = RHO.evaluate_at(q)
    qv = q
    eta = {
        ("c", "b"): ONE,
        ("b", "c"): qv * qv,
        ("a", "a"): inv2,
        ("a", "d"): -qv * inv2,
        ("d", "a"): -qv * inv2,
        ("d", "d"): qv * (qv * qv + qv - ONE) * inv2,
    }
    for t1 in ("a", "d"):
        for t2 in ("a", "d"):
            eta[(t1, t2)] = eta.get((t1, t2), ZERO) + rho
    return {k: v for k, v in eta.items() if v}


ETA = metric_coefficients()


def de_coords(i):
    df = cal.exterior_d(cal.basis_form(i), normalized=True)
    return {(w[0], w[1]): el.counit() for w, el in df.terms.items()}


def wedge_pair(x, y):
    return {(w[0], w[1]): c for w, c in cal.exterior.reduce_word((x, y)).items()}


def rows_torsion(tbl):
    rows = []
    for i in FORMS:
        coeff = {}
        for (j, k), c in TABLES[tbl][i].items():
            for m in FORMS:
                for w, sc in wedge_pair(m, k).items():
                    d = coeff.setdefault(w, {})
                    d[(j, m)] = d.get((j, m), ZERO) + c * sc
        rhs = de_coords(i)
        for w in LAMBDA2:
            row = [coeff.get(w, {}).get(u, ZERO) for u in UNKNOWNS]
            const = rhs.get(w, ZERO)
            if any(row) or const:
                rows.append((row, -const))
    return rows


def rows_cotorsion_display(tbl):
    rows = []
    for i in FORMS:
        coeff = {}
        for (j, k), c in TABLES[tbl][i].items():
            for m in FORMS:
                for w, sc in wedge_pair(j, m).items():
                    d = coeff.setdefault(w, {})
                    d[(k, m)] = d.get((k, m), ZERO) + c * sc
        rhs = de_coords(i)
        for w in LAMBDA2:
            row = [coeff.get(w, {}).get(u, ZERO) for u in UNKNOWNS]
            const = rhs.get(w, ZERO)
            if any(row) or const:
                rows.append((row, -const))
    return rows


def rows_cotorsion_metric(tbl):
    """(d (x) id) eta - (wedge (id (x) nabla)) eta = 0 with nabla from the table."""
    rows = []
    des = {j: de_coords(j) for j in FORMS}
    for t in FORMS:
        coeff = {}
        const_terms = {}
        for (j, k), e in ETA.items():
            if k == t:
                for w, v in des[j].items():
                    const_terms[w] = const_terms.get(w, ZERO) + e * v
            # - e_j /\ nabla e_k keeps +sum ad(m t|k) e_j /\ A_m
            for (m, n), c in TABLES[tbl][k].items():
                if n != t:
                    continue
                for mm in FORMS:
                    for w, sc in wedge_pair(j, mm).items():
                        d = coeff.setdefault(w, {})
                        d[(m, mm)] = d.get((m, mm), ZERO) + e * c * sc
        for w in LAMBDA2:
            row = [coeff.get(w, {}).get(u, ZERO) for u in UNKNOWNS]
            const = const_terms.get(w, ZERO)
            if any(row) or const:
                rows.append((row, -const))
    return rows


FAMILIES = {
    "T[adL]": lambda: rows_torsion("adL"),
    "T[adR]": lambda: rows_torsion("adR"),
    "Cdisp[adR]": lambda: rows_cotorsion_display("adR"),
    "Cdisp[adL]": lambda: rows_cotorsion_display("adL"),
    "Cmet[adL]": lambda: rows_cotorsion_metric("adL"),
    "Cmet[adR]": lambda: rows_cotorsion_metric("adR"),
}


def substitute_printed(rows):
    """Plug the 13 printed values; return reduced system in the 3 free unknowns."""
    out = []
    for row, const in rows:
        c2 = const
        free_part = []
        for u, coef in zip(UNKNOWNS, row):
            if u in PRINTED:
                c2 = c2 - coef * PRINTED[u]
            else:
                free_part.append(coef)
        out.append((free_part, c2))
    return out


def classify(rows, n_unknowns):
    a = [r for r, _ in rows]
    b = [c for _, c in rows]
    try:
        x = linalg.solve_unique(a, b, ZERO)
        return "unique", x
    except linalg.InconsistentSystem as e:
        return f"inconsistent(r{e.rank})", None
    except linalg.UnderdeterminedSystem as e:
        return f"underdet(r{e.rank})", None


def main():
    print("== printed-value consistency per family (3 free unknowns ca, cb, db) ==")
    cache = {}
    for name, fn in FAMILIES.items():
        rows = fn()
        cache[name] = rows
        sub = substitute_printed(rows)
        status, x = classify(sub, 3)
        extra = ""
        if x is not None:
            extra = "  " + ", ".join(f"A_{u[0]}^{u[1]}={v}" for u, v in zip(FREE, x))
        print(f"  {name:12s}: n_eq={len(sub):2d}  {status}{extra}")

    print("== pairs: full 16-unknown solve + printed-substitution consistency ==")
    for n1, n2 in itertools.combinations(FAMILIES, 2):
        rows = cache[n1] + cache[n2]
        status_full, sol = classify(rows, 16)
        status_sub, xsub = classify(substitute_printed(rows), 3)
        print(f"  {n1} + {n2}: full={status_full}; printed-sub={status_sub}")


if __name__ == "__main__":
    main()
