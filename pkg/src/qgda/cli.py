"""qgda command-line tool.

Exit codes: 0 success, 1 verification failure, 2 usage/parse/evaluation
error, 3 algebra-validation failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .basealg import validate
from .calculus import Basis, KForm, phi_recurrence_report, poly_P, poly_Phi, poly_Q
from .evaluate import EvalError, Session, evaluate_source
from .extension import ExtAlgebra
from .instances import resolve_algebra
from .parser import ParseError
from .verify import SUITES, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_INVALID = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("-a", "--algebra", default="quantum-plane:3",
                   help="quantum-plane:N, quaternion, or an algebra JSON file (default: quantum-plane:3)")
    p.add_argument("-x", "--coordinate", default=None,
                   help="coordinate expression (default: the canonical generator)")
    p.add_argument("-f", "--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    p.add_argument("-k", type=int, default=None, help="polynomial degree bound")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qgda", description="Graded q-differential calculus of A[t].")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate expressions")
    _common(p)
    p.add_argument("exprs", nargs="*", help="expressions to evaluate")
    p.add_argument("--batch", type=Path, help="file with one expression per line")
    p.add_argument("--dx-basis", action="store_true", help="print homogeneous results as (dx)^k forms")

    p = sub.add_parser("verify", help="run a verification suite")
    _common(p)
    p.add_argument("suite", help="one of: " + ", ".join(SUITES))
    p.add_argument("--samples", type=int, default=50, help="random samples per law")

    p = sub.add_parser("poly", help="print Q_k, P_k, Phi_k")
    _common(p)
    p.add_argument("which", nargs="?", default="all", choices=("P", "Q", "Phi", "all"))

    p = sub.add_parser("algebra", help="show or validate an algebra")
    _common(p)
    p.add_argument("action", choices=("show", "validate"))
    return parser


def _load(spec: str, *, gate: bool) -> ExtAlgebra:
    try:
        ext = resolve_algebra(spec)
    except (KeyError, TypeError) as exc:
        raise CliError(f"malformed algebra file: {exc}", EXIT_INVALID) from None
    except ValueError as exc:
        code = EXIT_INVALID if Path(spec).exists() else EXIT_USAGE
        raise CliError(str(exc), code) from None
    except json.JSONDecodeError as exc:  # pragma: no cover - subclass of ValueError
        raise CliError(f"algebra file is not JSON: {exc}", EXIT_INVALID) from None
    if gate:
        report = validate(ext.base)
        if not report.ok:
            lines = "\n".join(f"  {f}" for f in report.failures[:10])
            raise CliError(f"algebra {spec} fails validation:\n{lines}", EXIT_INVALID)
    return ext


def _session(args, ext: ExtAlgebra, basis: Basis = Basis.TAU) -> Session:
    try:
        return Session.open(ext, args.coordinate, args.format, basis)
    except ParseError as exc:
        raise CliError(f"coordinate: {exc}", EXIT_USAGE) from None
    except EvalError as exc:
        raise CliError(f"coordinate: {exc}", EXIT_USAGE) from None


def _emit(obj, fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2), file=out)
    else:
        print(obj, file=out)


def cmd_eval(args, out) -> int:
    ext = _load(args.algebra, gate=True)
    session = _session(args, ext, Basis.DX if args.dx_basis else Basis.TAU)
    sources = list(args.exprs)
    if args.batch:
        sources += [ln.strip() for ln in args.batch.read_text(encoding="utf-8").splitlines()
                    if ln.strip() and not ln.lstrip().startswith("#")]
    if not sources:
        raise CliError("nothing to evaluate", EXIT_USAGE)
    code = EXIT_OK
    results = []
    for src in sources:
        try:
            value = evaluate_source(src, session)
        except ParseError as exc:
            results.append({"expr": src, "error": str(exc), "position": exc.position,
                            "expected": sorted(exc.expected)})
            code = EXIT_USAGE
            continue
        except EvalError as exc:
            results.append({"expr": src, "error": str(exc)})
            code = EXIT_USAGE
            continue
        kind = "form" if isinstance(value, KForm) else "element"
        results.append({"expr": src, "kind": kind, "value": value})
    if args.format == "json":
        payload = [
            {k: (v.to_json() if k == "value" else v) for k, v in r.items()} for r in results
        ]
        _emit(payload if len(payload) > 1 else payload[0], "json", out)
    else:
        for r in results:
            if "error" in r:
                print(f"{r['expr']}: {r['error']}", file=out)
            else:
                print(f"{r['expr']} = {r['value']}", file=out)
    return code


def cmd_verify(args, out) -> int:
    if args.suite not in SUITES:
        raise CliError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}", EXIT_USAGE)
    ext = _load(args.algebra, gate=False)
    try:
        session = _session(args, ext)
    except CliError:
        if args.coordinate is not None:
            raise
        session = Session(ext)
    report = run_suite(args.suite, ext, session.coordinate, seed=args.seed, samples=args.samples)
    _emit(report.to_json() if args.format == "json" else report.to_text(), args.format, out)
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_poly(args, out) -> int:
    ext = _load(args.algebra, gate=True)
    c = _session(args, ext).require_coordinate()
    N = ext.n
    kmax = args.k if args.k is not None else N
    which = ("Q", "P", "Phi") if args.which == "all" else (args.which,)
    table = {}
    for name in which:
        fn, hi = {"Q": (poly_Q, N), "P": (poly_P, N), "Phi": (poly_Phi, N - 1)}[name]
        table[name] = {k: fn(k, c) for k in range(1, min(kmax, hi) + 1)}
    recurrence = phi_recurrence_report(c) if "Phi" in which else {}
    if args.format == "json":
        payload = {
            "algebra": ext.name,
            "coordinate": c.x.to_json(),
            "polynomials": {n: {str(k): v.to_json() for k, v in rows.items()} for n, rows in table.items()},
        }
        if recurrence:
            payload["phi_recurrence"] = {str(k): row for k, row in recurrence.items()}
        _emit(payload, "json", out)
    else:
        print(f"{ext.name}, coordinate x = {c.x}", file=out)
        for name, rows in table.items():
            for k, v in rows.items():
                print(f"{name}_{k} = {v}", file=out)
        for k, row in recurrence.items():
            hits = ", ".join(n for n, ok in row.items() if ok) or "none"
            print(f"Phi_{k + 1} = Ad(Phi_{k}) + q^e Phi_1 holds for: {hits}", file=out)
    return EXIT_OK


def cmd_algebra(args, out) -> int:
    ext = _load(args.algebra, gate=False)
    A = ext.base
    if args.action == "validate":
        report = validate(A)
        if args.format == "json":
            _emit({"ok": report.ok, "failures": [
                {"law": f.law, "witness": list(f.witness), "detail": f.detail} for f in report.failures
            ]}, "json", out)
        else:
            print("valid" if report.ok else "\n".join(str(f) for f in report.failures), file=out)
        return EXIT_OK if report.ok else EXIT_INVALID
    if args.format == "json":
        _emit(A.to_json(ext.sign), "json", out)
        return EXIT_OK
    print(f"{ext.name}: N = {ext.n}, t^N = {ext.sign:+d}, dim A = {A.dim}", file=out)
    print(f"basis: {', '.join(A.basis_names)}", file=out)
    for i, a in enumerate(A.basis_names):
        row = [f"{a}*{b} = {A.basis(i) * A.basis(j)}" for j, b in enumerate(A.basis_names)]
        print("  " + ";  ".join(row), file=out)
    from .basealg import twist
    print("twist: " + ";  ".join(f"{n} -> {twist(A.basis(i))}" for i, n in enumerate(A.basis_names)), file=out)
    return EXIT_OK


COMMANDS = {"eval": cmd_eval, "verify": cmd_verify, "poly": cmd_poly, "algebra": cmd_algebra}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except CliError as exc:
        print(f"qgda: {exc}", file=sys.stderr)
        return exc.code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
