#!/usr/bin/env python3
"""Final exhaustive sweep: wedge-sign variant x derivative scale x family pairs.

Criterion: substitute the 13 printed connection values, check exact consistency
of the remaining 3 unknowns.  Reports any configuration that is consistent.
"""
from __future__ import annotations

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from ncgq import linalg
from ncgq.algebra import QuantumAlgebra
from ncgq.calculus import FORMS
from ncgq.constants import (AD_L_PRINTED, AD_R_PRINTED,
                            evaluate_ad_table, evaluate_connection_printed)
from ncgq.scalars import GaussianRational, ONE, ZERO

alg = QuantumAlgebra("i")
q = alg.q
q2 = q * q
mu = alg.mu
TABLES = {"adR": evaluate_ad_table(AD_R_PRINTED, q), "adL": evaluate_ad_table(AD_L_PRINTED, q)}
LAMBDA2 = [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]
UNKNOWNS = [(i, j) for i in FORMS for j in FORMS]
PRINTED = evaluate_connection_printed(q)


def make_reducer(cb_sign: int):
    """Pair-rule reducer with e_c/\e_b -> cb_sign * e_b/\e_c."""
    s = ONE if cb_sign > 0 else -ONE
    rules = {
        ("a", "a"): [], ("b", "b"): [], ("c", "c"): [],
        ("b", "a"): [(-ONE, ("a", "b"))],
        ("c", "a"): [(-ONE, ("a", "c"))] if cb_sign < 0 else [(q2, ("a", "c"))],
        ("c", "b"): [(s, ("b", "c"))],
        ("d", "d"): [(mu * s, ("b", "c"))],
        ("d", "a"): [(-ONE, ("a", "d")), (-mu * s, ("b", "c"))],
        ("d", "b"): [(-q2, ("b", "d")), (q2 * mu, ("a", "b"))],
        ("d", "c"): [(-q2, ("c", "d")), (-mu, ("a", "c"))],
    }
    if cb_sign > 0:
        # original q^2-twisted variant: ba -> q^-2 ab, ca -> q^2 ac
        rules[("b", "a")] = [(q2.inverse(), ("a", "b"))]
        rules[("d", "b")] = [(-q2, ("b", "d")), (-mu, ("a", "b"))]

    def reduce_pair(x, y):
        out = {}
        stack = [(ONE, (x, y))]
        while stack:
            c, w = stack.pop()
            if w in rules:
                for c2, repl in rules[w]:
                    stack.append((c * c2, repl))
            else:
                out[w] = out.get(w, ZERO) + c
        return {w: c for w, c in out.items() if c}

    return reduce_pair


def de_values(reduce_pair, scale):
    """d e_i from the graded commutator, reduced, scaled."""
    out = {}
    for i in FORMS:
        acc = {}
        for t in ("a", "d"):
            for w, c in reduce_pair(t, i).items():
                acc[w] = acc.get(w, ZERO) + c
            for w, c in reduce_pair(i, t).items():
                acc[w] = acc.get(w, ZERO) + c
        out[i] = {w: c * scale for w, c in acc.items() if c}
    return out


def build_family(tbl, side, reduce_pair, des):
    rows = []
    for i in FORMS:
        coeff = {}
        for (j, k), c in TABLES[tbl][i].items():
            for m in FORMS:
                red = reduce_pair(m, k) if side == "left" else reduce_pair(j, m)
                unk = (j, m) if side == "left" else (k, m)
                for w, sc in red.items():
                    d = coeff.setdefault(w, {})
                    d[unk] = d.get(unk, ZERO) + c * sc
        for w in LAMBDA2:
            row = [coeff.get(w, {}).get(u, ZERO) for u in UNKNOWNS]
            const = des[i].get(w, ZERO)
            if any(row) or const:
                rows.append((row, -const))
    return rows


def substituted_status(rows):
    sub = []
    for row, const in rows:
        c2 = const
        free = []
        for u, coef in zip(UNKNOWNS, row):
            if u in PRINTED:
                c2 = c2 - coef * PRINTED[u]
            else:
                free.append(coef)
        sub.append((free, c2))
    a = [r for r, _ in sub]
    b = [c for _, c in sub]
    try:
        x = linalg.solve_unique(a, b, ZERO)
        return "CONSISTENT", x
    except linalg.InconsistentSystem as e:
        return f"inc(r{e.rank})", None
    except linalg.UnderdeterminedSystem as e:
        return f"und(r{e.rank})", None


def main():
    specs = [(tbl, side) for tbl in TABLES for side in ("left", "right")]
    hits = 0
    for cb_sign in (-1, 1):
        reduce_pair = make_reducer(cb_sign)
        for scale_name, scale in (("norm", ONE), ("unnorm", mu), ("neg", -ONE)):
            des = de_values(reduce_pair, scale if scale_name != "norm" else mu.inverse() * mu)
            if scale_name == "norm":
                des = de_values(reduce_pair, mu.inverse())
            elif scale_name == "unnorm":
                des = de_values(reduce_pair, ONE)
            else:
                des = de_values(reduce_pair, -mu.inverse())
            fam = {f"{t}/{s}": build_family(t, s, reduce_pair, des) for t, s in specs}
            for name, rows in fam.items():
                st, x = substituted_status(rows)
                if st == "CONSISTENT":
                    hits += 1
                    print(f"cb{cb_sign:+d} d:{scale_name}  single {name}: {st} free={x}")
            for (n1, r1), (n2, r2) in itertools.combinations(fam.items(), 2):
                st, x = substituted_status(r1 + r2)
                if st == "CONSISTENT":
                    hits += 1
                    print(f"cb{cb_sign:+d} d:{scale_name}  pair {n1}+{n2}: {st} free={x}")
    if not hits:
        print("no configuration is consistent with the 13 printed connection values")


if __name__ == "__main__":
    main()
