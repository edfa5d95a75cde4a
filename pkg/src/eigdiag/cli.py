"""Command-line front end.

Exit status: 0 success, 1 a requested check was violated, 2 bad input,
3 internal failure (solver non-convergence, oracle disagreement).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
from pathlib import Path

import numpy as np

from eigdiag.classes import ClassTag, classify, det_m3, signless_laplacian
from eigdiag.errors import InputError, OracleDisagreement
from eigdiag.explorer import DEFAULT_SEED, SearchTask, search_many
from eigdiag.inequalities import (
    ceil_half,
    certify_theorem1,
    certify_theorem2,
    check_basic_bounds,
    check_interlacing,
    check_schur_majorization,
    check_theorem1,
    check_theorem2,
    check_weyl,
    offdiagonal_spectrum_pairing,
)
from eigdiag.io import matrix_to_doc, read_edge_list, read_matrix, write_matrix
from eigdiag.linalg import HermitianMatrix, eigenvalues, split_diag_offdiag
from eigdiag.oracle import MAX_ORDER, oracle_eigenvalues

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3
ALL_CHECKS = ("basic", "schur", "weyl", "interlace", "thm1", "thm2", "pairing")
FUZZ_CHECKS = ("basic", "thm1", "thm2")


def _num(x):
    x = float(x)
    return x if math.isfinite(x) else None


def _digest(path) -> str:
    return "sha256:" + hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _report_record(report) -> dict:
    return {
        "name": report.name,
        "holds": report.holds,
        "worst_slack": _num(report.worst_slack),
        "witness": list(report.witness),
        "tolerance": _num(report.tolerance),
        "parts": list(report.parts),
        "unsupported": list(report.unsupported),
        "comparisons": [
            {"label": c.label, "index": list(c.index), "lhs": _num(c.lhs), "rhs": _num(c.rhs), "slack": _num(c.slack)}
            for c in report.comparisons
        ],
    }


def _certificate_record(cert) -> dict:
    return {
        "k": cert.k,
        "lambda_k_A": _num(cert.lambda_k_A),
        "lambda_k_sub": _num(cert.lambda_k_sub),
        "lambda_k_M": _num(cert.lambda_k_M),
        "a_target": _num(cert.a_target),
        "chain_valid": cert.chain_valid,
        "tolerance": _num(cert.tolerance),
        "trace_M": _num(cert.trace_M),
        "det_M": None if cert.det_M is None else _num(cert.det_M),
    }


def _matrix_summary(A: HermitianMatrix, spectrum) -> dict:
    return {
        "n": A.n,
        "classes": sorted(t.value for t in classify(A)),
        "eigenvalues": [_num(x) for x in spectrum.values],
        "sorted_diagonal": [_num(x) for x in np.sort(A.diagonal)],
    }


def _echo(args) -> dict:
    skip = {"func", "format", "command"}
    return {"command": args.command, "args": {k: v for k, v in sorted(vars(args).items()) if k not in skip}}


# -- commands ---------------------------------------------------------------


def cmd_eig(args) -> tuple[dict, int]:
    A = read_matrix(args.input)
    spec = eigenvalues(A)
    trace = float(A.diagonal.sum())
    gap = abs(float(spec.values.sum()) - trace)
    scale = max(1.0, A.frobenius_norm)
    doc = {**_echo(args), "input_digest": _digest(args.input), **_matrix_summary(A, spec)}
    doc["trace"] = _num(trace)
    doc["trace_gap"] = _num(gap)
    doc["trace_ok"] = gap <= 1e-10 * scale
    doc["max_residual"] = _num(spec.max_residual)
    if A.n <= MAX_ORDER:
        diff = float(np.abs(spec.values - oracle_eigenvalues(A).values).max())
        doc["oracle_max_diff"] = _num(diff)
        if diff > 1e-9 * scale:
            raise OracleDisagreement(f"Jacobi and oracle differ by {diff:.3e}")
    return doc, EXIT_OK


def _parse_checks(text, allowed):
    checks = [c.strip() for c in text.split(",") if c.strip()]
    bad = [c for c in checks if c not in allowed]
    if bad or not checks:
        raise InputError(f"unknown checks {bad}; choose from {', '.join(allowed)}")
    return list(dict.fromkeys(checks))


def _interlace_all(A, spec):
    reports = [check_interlacing(A, r, spec) for r in range(1, A.n + 1)]
    worst = min(reports, key=lambda rep: rep.worst_slack)
    comps = tuple(c for rep in reports for c in rep.comparisons)
    return type(worst)(
        name="interlace",
        holds=all(rep.holds for rep in reports),
        worst_slack=worst.worst_slack,
        witness=worst.witness,
        tolerance=worst.tolerance,
        comparisons=comps,
        parts=("interlace",),
    )


def cmd_verify(args) -> tuple[dict, int]:
    A = read_matrix(args.input)
    checks = _parse_checks(args.checks, ALL_CHECKS)
    spec = eigenvalues(A)
    records = []
    for check in checks:
        if check == "basic":
            rep = check_basic_bounds(A, spec)
        elif check == "schur":
            rep = check_schur_majorization(A, spec)
        elif check == "weyl":
            if args.other:
                rep = check_weyl(A, read_matrix(args.other))
            else:
                D, M = split_diag_offdiag(A)
                rep = check_weyl(M, D)
        elif check == "interlace":
            rep = _interlace_all(A, spec)
        elif check == "thm1":
            rep = check_theorem1(A, args.force, spec)
        elif check == "thm2":
            rep = check_theorem2(A, args.force, spec)
        else:
            rep = offdiagonal_spectrum_pairing(split_diag_offdiag(A)[1], args.force)
        records.append(_report_record(rep))
    doc = {**_echo(args), "input_digest": _digest(args.input), **_matrix_summary(A, spec), "checks": records}
    status = EXIT_OK if all(r["holds"] for r in records) else EXIT_VIOLATION
    return doc, status


def cmd_certify(args) -> tuple[dict, int]:
    A = read_matrix(args.input)
    spec = eigenvalues(A)
    in_class_i = ClassTag.CLASS_I in classify(A)
    top = ceil_half(A.n)
    if args.k == "all":
        ks = list(range(1, top + 1)) if in_class_i or args.force else [k for k in (1, 2) if k <= top]
    else:
        try:
            ks = [int(args.k)]
        except ValueError:
            raise InputError(f"--k must be an integer or 'all', got {args.k!r}") from None
    certs = []
    for k in ks:
        if k == 2 and not in_class_i and not args.force:
            certs.append(certify_theorem1(A, spec))
        else:
            # k = 1 is the basic bound and holds for every Hermitian matrix
            certs.append(certify_theorem2(A, k, force=args.force or k == 1, spectrum=spec))
    doc = {**_echo(args), "input_digest": _digest(args.input), **_matrix_summary(A, spec)}
    if A.n >= 3:
        doc["det_m3"] = _num(det_m3(A))
    doc["certificates"] = [_certificate_record(c) for c in certs]
    status = EXIT_OK if all(c.chain_valid for c in certs) else EXIT_VIOLATION
    return doc, status


def _fuzz_targets(check, cls, n, force):
    """(label, family, k, guaranteed) rows for one fuzz check."""
    if check == "basic":
        return [("basic", "lower", 1, True), ("basic", "upper", 1, True)]
    if check == "thm1":
        if n < 3:
            raise InputError("thm1 needs n >= 3")
        rows = [("thm1/eq3", "lower", 2, True)]
        if cls is ClassTag.CLASS_I or force:
            rows.append(("thm1/eq4", "upper", 2, cls is ClassTag.CLASS_I))
        return rows
    guaranteed = cls is ClassTag.CLASS_I
    return [
        ("thm2", family, k, guaranteed)
        for family in ("lower", "upper")
        for k in range(1, ceil_half(n) + 1)
    ]


def cmd_fuzz(args) -> tuple[dict, int]:
    cls = ClassTag(args.cls)
    checks = _parse_checks(args.checks, FUZZ_CHECKS)
    lo, hi = (0.0, 1.0) if args.quantized else (-1.0, 1.0)
    if args.diag_lo is not None:
        lo = args.diag_lo
    if args.diag_hi is not None:
        hi = args.diag_hi
    task = SearchTask(cls, "lower", 1, args.n, args.trials, args.seed, (lo, hi), args.offdiag_max, args.quantized)
    rows = [row for check in checks for row in _fuzz_targets(check, cls, args.n, args.force)]
    outcomes = search_many(task, [(family, k) for _, family, k, _ in rows])
    results = []
    status = EXIT_OK
    for (label, family, k, guaranteed), out in zip(rows, outcomes):
        rec = {
            "check": label,
            "family": family,
            "k": k,
            "guaranteed": guaranteed,
            "trials_run": out.trials_run,
            "violations_found": out.violations_found,
            "rejected_by_oracle": out.rejected_by_oracle,
            "worst_slack": _num(out.worst_slack),
            "first_witness": None,
        }
        w = out.first_witness
        if w is not None:
            rec["first_witness"] = {
                "trial": w.trial,
                "seed": w.seed,
                "slack": _num(w.slack),
                "oracle_slack": _num(w.oracle_slack),
                "matrix": matrix_to_doc(w.matrix),
            }
        if guaranteed and out.violations_found:
            status = EXIT_VIOLATION
        results.append(rec)
    doc = {**_echo(args), "diag_range": [lo, hi], "searches": results}
    return doc, status


def cmd_graph(args) -> tuple[dict, int]:
    G = read_edge_list(args.input)
    Q = signless_laplacian(G)
    if args.output:
        write_matrix(Q, args.output)
    spec = eigenvalues(Q)
    reports = [check_basic_bounds(Q, spec), check_schur_majorization(Q, spec)]
    if Q.n >= 3:
        reports.append(check_theorem1(Q, spectrum=spec))
    doc = {
        **_echo(args),
        "input_digest": _digest(args.input),
        **_matrix_summary(Q, spec),
        "matrix": matrix_to_doc(Q),
        "checks": [_report_record(r) for r in reports],
    }
    status = EXIT_OK if all(r.holds for r in reports) else EXIT_VIOLATION
    return doc, status


# -- rendering --------------------------------------------------------------


def render_machine(doc: dict) -> str:
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def _fmt(x) -> str:
    return "nan" if x is None else f"{x:.17g}"


def render_human(doc: dict) -> str:
    out = [f"command: {doc['command']}"]
    if "input_digest" in doc:
        out.append(f"input: {doc['args'].get('input')} ({doc['input_digest'][:19]})")
    if "eigenvalues" in doc:
        out.append(f"classes: {', '.join(doc['classes'])}")
        out.append("eigenvalues:     " + "  ".join(_fmt(x) for x in doc["eigenvalues"]))
        out.append("sorted diagonal: " + "  ".join(_fmt(x) for x in doc["sorted_diagonal"]))
    for key in ("trace", "trace_gap", "max_residual", "oracle_max_diff", "det_m3"):
        if key in doc:
            out.append(f"{key}: {_fmt(doc[key])}")
    for rec in doc.get("checks", []):
        verdict = "PASS" if rec["holds"] else "FAIL"
        note = f"  unsupported: {','.join(rec['unsupported'])}" if rec["unsupported"] else ""
        witness = " ".join(str(x) for x in rec["witness"])
        out.append(f"{verdict} {rec['name']:<10} worst slack {_fmt(rec['worst_slack'])} at [{witness}]{note}")
    for cert in doc.get("certificates", []):
        verdict = "VALID" if cert["chain_valid"] else "BROKEN"
        out.append(
            f"{verdict} k={cert['k']}: lambda_k(A)={_fmt(cert['lambda_k_A'])} <= "
            f"lambda_k(A_r)={_fmt(cert['lambda_k_sub'])} <= "
            f"lambda_k(M_r)={_fmt(cert['lambda_k_M'])} + a_r={_fmt(cert['a_target'])}"
        )
    for rec in doc.get("searches", []):
        tag = "guaranteed" if rec["guaranteed"] else "exploratory"
        line = (
            f"{rec['check']:<9} {rec['family']:<5} k={rec['k']:<3} {tag:<11} "
            f"violations {rec['violations_found']}/{rec['trials_run']}  worst slack {_fmt(rec['worst_slack'])}"
        )
        if rec["first_witness"]:
            line += f"  first at trial {rec['first_witness']['trial']}"
        out.append(line)
    return "\n".join(out) + "\n"


# -- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eigdiag", description="Eigenvalue vs diagonal inequality checker")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("human", "machine"), default="human")
        p.set_defaults(func=func)
        return p

    p = add("eig", cmd_eig, "eigenvalues, sorted diagonal and accuracy figures")
    p.add_argument("--input", required=True)

    p = add("verify", cmd_verify, "run inequality checks on a matrix file")
    p.add_argument("--input", required=True)
    p.add_argument("--checks", default=",".join(ALL_CHECKS))
    p.add_argument("--force", action="store_true", help="evaluate checks outside their class")
    p.add_argument("--other", help="second matrix for the weyl check (default: weyl on the D + M split)")

    p = add("certify", cmd_certify, "replay the theorem proof chains")
    p.add_argument("--input", required=True)
    p.add_argument("--k", default="all")
    p.add_argument("--force", action="store_true")

    p = add("fuzz", cmd_fuzz, "seeded random search for violations")
    p.add_argument("--class", dest="cls", choices=("P", "I"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--checks", default="thm2")
    p.add_argument("--force", action="store_true", help="also search parts not claimed for the class")
    p.add_argument("--quantized", action="store_true", help="draw entries from {0, 1} (signed for class I)")
    p.add_argument("--diag-lo", type=float)
    p.add_argument("--diag-hi", type=float)
    p.add_argument("--offdiag-max", type=float, default=1.0)

    p = add("graph", cmd_graph, "signless Laplacian of an edge list")
    p.add_argument("--input", required=True)
    p.add_argument("--output", help="write Q as a matrix file")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc, status = args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    render = render_machine if args.format == "machine" else render_human
    sys.stdout.write(render(doc))
    return status


if __name__ == "__main__":
    sys.exit(main())
