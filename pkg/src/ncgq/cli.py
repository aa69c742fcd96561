"""Command-line interface: verification suites, geometry artifacts, spectra, audit.

Grammar:
    ncgq <verify|connection|curvature|dirac|audit> --q <generic|1|i|-i>
         [--format json|text] [--out PATH] [--tol FLOAT]

Exit codes: 0 success, 1 mathematical failure, 2 usage error.  JSON output is
deterministic (sorted keys, fixed float formatting); text output is
human-oriented and unstable.  Files are written atomically.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .scalars import format_gaussian

VALID_Q = ("generic", "1", "i", "-i")
ROOT_MODES = ("i", "-i")


@dataclass
class RunConfig:
    command: str
    qmode: str
    out: str | None = None
    format: str = "json"
    tol: float = 1e-3


class ConfigError(ValueError):
    pass


def validate(cfg: RunConfig) -> None:
    if cfg.qmode not in VALID_Q:
        raise ConfigError(f"invalid q mode {cfg.qmode!r}; choose from {VALID_Q}")
    if cfg.format not in ("json", "text"):
        raise ConfigError(f"invalid format {cfg.format!r}")
    if cfg.command in ("connection", "curvature") and cfg.qmode == "1":
        raise ConfigError("q=1 is an extrapolated spectral mode only; "
                          "forms-level commands need generic, i or -i")
    if cfg.command == "dirac" and cfg.qmode == "generic":
        raise ConfigError("the spectral layer needs a concrete q mode (1, i or -i)")
    if cfg.command == "verify" and cfg.qmode == "1":
        raise ConfigError("verification suites run at generic, i or -i")


def _atomic_write(path: str, text: str) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=str(target.parent), prefix=".ncgq-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, str(target))
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit(cfg: RunConfig, document: dict, text_lines: list[str]) -> None:
    if cfg.format == "json":
        payload = json.dumps(document, indent=1, sort_keys=True) + "\n"
    else:
        payload = "\n".join(text_lines) + "\n"
    if cfg.out:
        _atomic_write(cfg.out, payload)
    else:
        sys.stdout.write(payload)


# -- commands -----------------------------------------------------------------------


def cmd_verify(cfg: RunConfig) -> int:
    from .verification import run_checks

    modes = ROOT_MODES if cfg.qmode == "generic" else (cfg.qmode,)
    forms_level_only = cfg.qmode == "generic"
    results = []
    for mode in modes:
        results += run_checks(mode, forms_level_only=forms_level_only)
    n_fail = sum(1 for r in results if not r["passed"])
    doc = {
        "command": "verify",
        "q": cfg.qmode,
        "checks": results,
        "passed": n_fail == 0,
    }
    lines = [f"verification suite (q = {cfg.qmode})", "-" * 44]
    for r in results:
        status = "pass" if r["passed"] else "FAIL"
        lines.append(f"[{status}] {r['mode']}: {r['name']}  {r.get('detail','')}")
    lines.append("-" * 44)
    lines.append(f"{len(results) - n_fail}/{len(results)} checks passed")
    emit(cfg, doc, lines)
    return 0 if n_fail == 0 else 1


def _calculus(mode: str):
    from .algebra import QuantumAlgebra
    from .calculus import Calculus

    return Calculus(QuantumAlgebra(mode))


def cmd_connection(cfg: RunConfig) -> int:
    from .riemannian import (assemble_connection_system, connection_residuals,
                             reference_connection)

    modes = ROOT_MODES if cfg.qmode == "generic" else (cfg.qmode,)
    docs = {}
    for mode in modes:
        cal = _calculus(mode)
        system = assemble_connection_system(cal)
        report = system.rank_report()
        conn = reference_connection(cal)
        res = connection_residuals(cal, conn)
        docs[mode] = {
            "system": report,
            "solver": {
                "status": "inconsistent" if not report["consistent"] else "solved",
                "rank": report["rank"],
                "n_unknowns": report["n_unknowns"],
            },
            "connection": {
                f"{i} {j}": format_gaussian(conn.coefficients[(i, j)])
                for (i, j) in sorted(conn.coefficients)
            },
            "connection_source": conn.source,
            "torsion_free": conn.torsion_free,
            "cotorsion_free": conn.cotorsion_free,
            "nonzero_torsion_rows": sum(1 for v in res["torsion"].values() if v),
            "nonzero_cotorsion_rows": sum(1 for v in res["cotorsion"].values() if v),
        }
    doc = {"command": "connection", "q": cfg.qmode, "results": docs}
    lines = [f"spin connection (q = {cfg.qmode})"]
    for mode, d in docs.items():
        lines.append(f"mode {mode}: system rank {d['system']['rank']}"
                     f"/{d['system']['n_unknowns']}, consistent: {d['system']['consistent']}")
        for key, val in d["connection"].items():
            lines.append(f"  A_{key.split()[0]}^{key.split()[1]} = {val}")
    emit(cfg, doc, lines)
    return 0


def cmd_curvature(cfg: RunConfig) -> int:
    from .calculus import FORMS
    from .riemannian import (covariant_derivative_basis, reference_connection,
                             riemann_basis)

    modes = ROOT_MODES if cfg.qmode == "generic" else (cfg.qmode,)
    docs = {}
    for mode in modes:
        cal = _calculus(mode)
        conn = reference_connection(cal)
        nabla = {}
        riem = {}
        for i in FORMS:
            nd = covariant_derivative_basis(cal, conn, i)
            nabla[i] = {k: str(x) for k, x in nd.legs.items()}
            rd = riemann_basis(cal, conn, i)
            riem[i] = {k: str(x) for k, x in rd.legs.items()}
        docs[mode] = {"covariant_derivative": nabla, "riemann": riem,
                      "connection_source": conn.source}
    doc = {"command": "curvature", "q": cfg.qmode, "results": docs}
    lines = [f"curvature (q = {cfg.qmode})"]
    for mode, d in docs.items():
        for i, legs in d["riemann"].items():
            lines.append(f"mode {mode}: Riemann(e_{i}):")
            for k, x in legs.items():
                lines.append(f"    [{x}] (x) e_{k}")
    emit(cfg, doc, lines)
    return 0


def cmd_dirac(cfg: RunConfig) -> int:
    from .dirac import EigensolverError, spectrum_pipeline

    try:
        dm, spec, report = spectrum_pipeline(cfg.qmode)
    except EigensolverError as exc:
        sys.stderr.write(f"eigensolver failure: {exc}\n")
        return 1
    doc = {
        "q": cfg.qmode,
        "normalization": "unnormalized",
        "extrapolated": dm.extrapolated,
        "eigenvalues": [[z.real, z.imag] for z in spec.eigenvalues],
        "max_residual": spec.max_residual(),
        "reference": "paper-prop4",
        "max_match_distance": report.max_distance if report else None,
        "mean_match_distance": report.mean_distance if report else None,
        "match_distances": report.distances if report else None,
        "connection_scalars": {str(k): [v.real, v.imag] for k, v in dm.scalars.items()},
    }
    lines = [f"Dirac spectrum (q = {cfg.qmode}, unnormalized"
             f"{', extrapolated' if dm.extrapolated else ''})"]
    for z in spec.eigenvalues:
        lines.append(f"  {z.real:+.6f} {z.imag:+.6f}i")
    if report:
        lines.append(f"max match distance vs reference list: {report.max_distance:.3g}")
    emit(cfg, doc, lines)
    if report and report.max_distance > cfg.tol:
        return 1
    return 0


def cmd_audit(cfg: RunConfig) -> int:
    from .audit import build_audit_report

    mode = cfg.qmode if cfg.qmode in ROOT_MODES else "i"
    doc = build_audit_report(mode)
    lines = [f"consistency audit (q = {mode})", "-" * 60]
    for row in doc["rows"]:
        lines.append(f"[{row['verdict']:>11s}] {row['section']}: {row['quantity']}")
        lines.append(f"   printed:  {row['printed']}")
        lines.append(f"   computed: {row['computed']}")
    lines.append("-" * 60)
    lines.append(str(doc["summary"]))
    emit(cfg, doc, lines)
    return 0


COMMANDS = {
    "verify": cmd_verify,
    "connection": cmd_connection,
    "curvature": cmd_curvature,
    "dirac": cmd_dirac,
    "audit": cmd_audit,
}


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="ncgq",
        description="Exact reconstruction and audit of a reduced quantum geometry at q^4 = 1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--q", dest="qmode", default="i")
        p.add_argument("--format", dest="format", default="json", choices=["json", "text"])
        p.add_argument("--out", dest="out", default=None)
        p.add_argument("--tol", dest="tol", type=float, default=1e-3)
    if argv is None:
        argv = sys.argv[1:]
    # argparse treats the leading dash of the "-i" mode as an option prefix;
    # fold it into --q=... form before parsing
    folded = []
    skip = False
    for k, a in enumerate(argv):
        if skip:
            skip = False
            continue
        if a == "--q" and k + 1 < len(argv):
            folded.append(f"--q={argv[k + 1]}")
            skip = True
        else:
            folded.append(a)
    try:
        args = parser.parse_args(folded)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    cfg = RunConfig(command=args.command, qmode=args.qmode, out=args.out,
                    format=args.format, tol=args.tol)
    try:
        validate(cfg)
    except ConfigError as exc:
        sys.stderr.write(f"configuration error: {exc}\n")
        return 2
    try:
        return COMMANDS[cfg.command](cfg)
    except ConfigError as exc:
        sys.stderr.write(f"configuration error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
