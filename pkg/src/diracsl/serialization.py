"""Problem files (JSON) and curve data (CSV)."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .assembly import DiracWeight
from .errors import ValidationError
from .potential import Potential, potential_from_dict
from .tolerances import DEFAULT_TOLERANCES, Tolerances

__all__ = [
    "ProblemFile",
    "problem_from_dict",
    "parse_problem",
    "load_problem",
    "emit_problem",
    "format_float",
    "emit_csv",
    "read_csv",
    "dumps_json",
]

_TOL_KEYS = ("zero_det", "root", "dedup", "ode_rel", "ode_abs")


@dataclass(frozen=True)
class ProblemFile:
    potential: Potential
    weight: DiracWeight
    tolerance_overrides: dict = field(default_factory=dict)

    @property
    def tolerances(self) -> Tolerances:
        return DEFAULT_TOLERANCES.with_overrides(**self.tolerance_overrides)

    def to_dict(self) -> dict:
        out = {"potential": self.potential.to_dict(), "weight": self.weight.to_dict()}
        if self.tolerance_overrides:
            out["tolerances"] = dict(self.tolerance_overrides)
        return out


def _reject_unknown(obj: dict, allowed: Iterable[str], where: str) -> None:
    extra = sorted(set(obj) - set(allowed))
    if extra:
        raise ValidationError(f"unknown key(s) in {where}: {', '.join(extra)}")


def _number_list(v, name: str) -> list:
    if not isinstance(v, list) or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in v):
        raise ValidationError(f"{name} must be a list of numbers")
    return v


def problem_from_dict(obj) -> ProblemFile:
    if not isinstance(obj, dict):
        raise ValidationError("problem must be a JSON object")
    _reject_unknown(obj, ("potential", "weight", "tolerances"), "problem")
    for key in ("potential", "weight"):
        if key not in obj:
            raise ValidationError(f"missing key: {key}")
    q = potential_from_dict(obj["potential"])
    w_obj = obj["weight"]
    if not isinstance(w_obj, dict):
        raise ValidationError("weight must be a JSON object")
    _reject_unknown(w_obj, ("nodes", "masses"), "weight")
    for key in ("nodes", "masses"):
        if key not in w_obj:
            raise ValidationError(f"missing key: weight.{key}")
    w = DiracWeight(_number_list(w_obj["nodes"], "weight.nodes"), _number_list(w_obj["masses"], "weight.masses"))
    tol_obj = obj.get("tolerances", {})
    if not isinstance(tol_obj, dict):
        raise ValidationError("tolerances must be a JSON object")
    _reject_unknown(tol_obj, _TOL_KEYS, "tolerances")
    overrides = {}
    for k, v in tol_obj.items():
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not 0 < v < 1:
            raise ValidationError(f"tolerances.{k} must be a number in (0, 1)")
        overrides[k] = float(v)
    return ProblemFile(q, w, overrides)


def parse_problem(text: str) -> ProblemFile:
    """Parse problem JSON text.  Malformed JSON raises ``ValidationError`` too."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON: {exc}") from exc
    return problem_from_dict(obj)


def load_problem(path: Union[str, Path]) -> ProblemFile:
    return parse_problem(Path(path).read_text())


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_plain(v) for v in obj.tolist()]
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        return v if math.isfinite(v) else None
    return obj


def dumps_json(obj) -> str:
    """Deterministic JSON: sorted keys, shortest round-trip floats, NaN/inf as null."""
    return json.dumps(_plain(obj), sort_keys=True, indent=2) + "\n"


def emit_problem(problem: ProblemFile) -> str:
    return dumps_json(problem.to_dict())


def format_float(x) -> str:
    """Shortest string that round-trips; integral values print without a point."""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, str):
        return x
    v = float(x)
    if math.isfinite(v) and v == int(v) and abs(v) < 1e16:
        return str(int(v))
    return repr(v)


def emit_csv(rows: Iterable[Sequence], header: Union[str, Sequence[str]]) -> str:
    """CSV text with LF line endings and round-trip float formatting."""
    cols = header.split(",") if isinstance(header, str) else list(header)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for row in rows:
        row = list(row)
        if len(row) != len(cols):
            raise ValueError(f"row has {len(row)} fields, header has {len(cols)}")
        writer.writerow([format_float(v) for v in row])
    return buf.getvalue()


def read_csv(text: str, header: Optional[Sequence[str]] = None) -> np.ndarray:
    """Numeric CSV with a header line into a float array of shape (rows, cols)."""
    reader = csv.reader(io.StringIO(text))
    try:
        got = [h.strip() for h in next(reader)]
    except StopIteration:
        raise ValidationError("empty CSV") from None
    if header is not None and got != list(header):
        raise ValidationError(f"expected CSV header {','.join(header)!r}, got {','.join(got)!r}")
    rows = []
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(got):
            raise ValidationError(f"line {lineno}: expected {len(got)} fields")
        try:
            rows.append([float(v) for v in row])
        except ValueError:
            raise ValidationError(f"line {lineno}: non-numeric field") from None
    return np.array(rows, dtype=float).reshape(-1, len(got))
