"""Command-line front end.

Exit codes: 0 success, 1 usage / parse / validation error, 2 numerical
failure or classifier inconsistency.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .assembly import characteristic_polynomial
from .classifier import check_hypotheses, classify_spectrum, eigenfunction, reduced_characteristic_polynomial
from .errors import DiracSLError, DomainError, ValidationError
from .fundamental import build_basis
from .inverse import SampledSpectrumLike, forward_map, recover_q_values, validate_spectrum_like
from .potential import Potential, potential_from_dict
from .serialization import ProblemFile, dumps_json, emit_csv, load_problem, problem_from_dict, read_csv
from .shooting import MissFunction, default_window, scan_spectrum

__all__ = ["main", "build_parser", "spectrum_report"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _range(text: str, parts: int) -> tuple:
    bits = text.split(":")
    if len(bits) != parts:
        raise argparse.ArgumentTypeError(f"expected {parts} colon-separated fields, got {text!r}")
    try:
        vals = [float(b) for b in bits]
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-numeric field in {text!r}") from None
    if parts == 3:
        n = vals[2]
        if n != int(n) or n < 1:
            raise argparse.ArgumentTypeError("N must be a positive integer")
        return vals[0], vals[1], int(n)
    return tuple(vals)


def _window(text):
    return _range(text, 2)


def _grid(text):
    return _range(text, 3)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="diracsl", description="Dirichlet spectra with Dirac-delta weights and single-Dirac inversion.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("spectrum", help="eigenvalues and classification")
    s.add_argument("--problem", required=True)
    s.add_argument("--method", choices=["auto", "charpoly", "tridiag", "oracle"], default="auto")
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report (default)")
    fmt.add_argument("--csv", action="store_true", help="CSV of eigenvalue,residual")
    s.add_argument("--window", type=_window, help="oracle scan window LO:HI")
    s.add_argument("--samples", type=int, default=2001, help="oracle scan samples")

    s = sub.add_parser("classify", help="hypotheses and classification only")
    s.add_argument("--problem", required=True)

    s = sub.add_parser("charpoly", help="characteristic polynomial coefficients, ascending")
    s.add_argument("--problem", required=True)

    s = sub.add_parser("eigenfunction", help="CSV x,E of the eigenfunction for an eigenvalue")
    s.add_argument("--problem", required=True)
    s.add_argument("--lambda", dest="lam", type=float, required=True)
    s.add_argument("--samples", type=int, default=201)
    s.add_argument("--out")

    s = sub.add_parser("forward-map", help="CSV t,lambda of the single-Dirac eigenvalue curve")
    s.add_argument("--potential", required=True, help="potential JSON, problem file, or inline JSON")
    s.add_argument("--grid", type=_grid, required=True, help="LO:HI:N")
    s.add_argument("--out")

    s = sub.add_parser("inverse", help="recover q from t,lambda data")
    s.add_argument("--data", required=True)
    s.add_argument("--out")
    s.add_argument("--force", action="store_true", help="skip spectrum-like validation")

    s = sub.add_parser("validate-sl", help="spectrum-like checks on t,lambda data")
    s.add_argument("--data", required=True)

    s = sub.add_parser("oracle", help="shooting scan for sign changes of y(1; lambda)")
    s.add_argument("--problem", required=True)
    s.add_argument("--window", type=_window)
    s.add_argument("--samples", type=int, default=2001)
    return p


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_potential(arg: str) -> Potential:
    text = arg
    if not arg.lstrip().startswith("{"):
        text = Path(arg).read_text()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON: {exc}") from exc
    if isinstance(obj, dict) and "weight" in obj:
        return problem_from_dict(obj).potential
    return potential_from_dict(obj)


def _load_data(path: str) -> SampledSpectrumLike:
    arr = read_csv(Path(path).read_text(), ("t", "lambda"))
    return SampledSpectrumLike(arr[:, 0], arr[:, 1])


def _hypotheses(report) -> dict:
    return {"h0": report.h0, "h": report.h, "h1": report.h1, "margins": report.margins()}


def spectrum_report(problem: ProblemFile, method: str = "auto", window=None, samples: int = 2001) -> dict:
    """The ``spectrum`` subcommand's report as a plain dict."""
    tol = problem.tolerances
    basis = build_basis(problem.potential, tol)
    miss = MissFunction(problem.potential, problem.weight, tol)
    report, spec = classify_spectrum(basis, problem.weight, tol, "auto" if method == "oracle" else method)
    eig = np.array(spec.eigenvalues)
    used = spec.method
    out = {"hypotheses": _hypotheses(report), "classification": spec.kind.value}
    if method == "oracle" and spec.is_finite:
        lo, hi = window or default_window(problem.weight)
        eig = scan_spectrum(problem.potential, problem.weight, lo, hi, samples, tol, miss)
        used = "oracle"
        out["window"] = [lo, hi]
    out["method"] = used
    out["eigenvalues"] = sorted(float(v) for v in eig)
    out["residuals"] = [float(abs(miss(v))) for v in sorted(eig)]
    return out


def _cmd_spectrum(a) -> int:
    rep = spectrum_report(load_problem(a.problem), a.method, a.window, a.samples)
    if a.csv:
        _write(emit_csv(zip(rep["eigenvalues"], rep["residuals"]), "lambda,residual"), None)
    else:
        _write(dumps_json(rep), None)
    return 0


def _cmd_classify(a) -> int:
    pb = load_problem(a.problem)
    tol = pb.tolerances
    report, spec = classify_spectrum(build_basis(pb.potential, tol), pb.weight, tol)
    out = _hypotheses(report)
    out["classification"] = spec.kind.value
    _write(dumps_json(out), None)
    return 0


def _cmd_charpoly(a) -> int:
    pb = load_problem(a.problem)
    tol = pb.tolerances
    basis = build_basis(pb.potential, tol)
    report = check_hypotheses(basis, pb.weight, tol)
    raw = characteristic_polynomial(basis, pb.weight)
    red = reduced_characteristic_polynomial(basis, pb.weight, report, tol)
    out = {
        "coefficients": raw.coeffs.tolist(),
        "reduced_coefficients": red.coeffs.tolist(),
        "degree": red.degree,
        "case": basis.case_tag.value,
        "omega": basis.omega,
    }
    _write(dumps_json(out), None)
    return 0


def _cmd_eigenfunction(a) -> int:
    pb = load_problem(a.problem)
    if a.samples < 2:
        raise UsageError("--samples must be at least 2")
    tol = pb.tolerances
    E = eigenfunction(build_basis(pb.potential, tol), pb.weight, a.lam, tol)
    x = np.union1d(np.linspace(0.0, 1.0, a.samples), pb.weight.nodes)
    _write(emit_csv(zip(x, E(x)), "x,E"), a.out)
    return 0


def _cmd_forward_map(a) -> int:
    q = _load_potential(a.potential)
    lo, hi, n = a.grid
    ts = np.linspace(lo, hi, n)
    lam = forward_map(q, ts)
    _write(emit_csv(zip(ts, lam), "t,lambda"), a.out)
    return 0


def _cmd_inverse(a) -> int:
    f = _load_data(a.data)
    if not a.force:
        rep = validate_spectrum_like(f)
        if not rep.passed:
            raise ValidationError("data is not spectrum-like: " + "; ".join(rep.failures()) + " (use --force)")
    x, Q = recover_q_values(f)
    _write(emit_csv(zip(x, Q), "x,q"), a.out)
    return 0


def _cmd_validate(a) -> int:
    rep = validate_spectrum_like(_load_data(a.data))
    _write(dumps_json(rep.to_dict()), None)
    return 0 if rep.passed else 1


def _cmd_oracle(a) -> int:
    pb = load_problem(a.problem)
    lo, hi = a.window or default_window(pb.weight)
    tol = pb.tolerances
    miss = MissFunction(pb.potential, pb.weight, tol)
    roots = scan_spectrum(pb.potential, pb.weight, lo, hi, a.samples, tol, miss)
    out = {
        "window": [lo, hi],
        "samples": a.samples,
        "roots": roots.tolist(),
        "residuals": [float(abs(miss(r))) for r in roots],
    }
    _write(dumps_json(out), None)
    return 0


_COMMANDS = {
    "spectrum": _cmd_spectrum,
    "classify": _cmd_classify,
    "charpoly": _cmd_charpoly,
    "eigenfunction": _cmd_eigenfunction,
    "forward-map": _cmd_forward_map,
    "inverse": _cmd_inverse,
    "validate-sl": _cmd_validate,
    "oracle": _cmd_oracle,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (DomainError, UsageError, OSError) as exc:
        print(f"diracsl: error: {exc}", file=sys.stderr)
        return 1
    except (DiracSLError, ArithmeticError) as exc:
        print(f"diracsl: numerical failure: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"diracsl: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
