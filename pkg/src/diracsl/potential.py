"""Integrable potentials q on [0, 1].

Four concrete representations are supported: ``Zero``, ``Constant``,
``PiecewiseConstant`` (right-continuous at interior breakpoints) and
``Sampled`` (piecewise-linear interpolation of samples).  All are immutable.

>>> p = PiecewiseConstant([0, 0.5, 1], [-1, 2])
>>> evaluate(p, 0.5), l1_norm(p)
(2.0, 1.5)
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, ValidationError

__all__ = [
    "Potential",
    "Zero",
    "Constant",
    "PiecewiseConstant",
    "Sampled",
    "evaluate",
    "l1_norm",
    "breakpoints",
    "potential_from_dict",
]


def _as_grid(values: Sequence[float], name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise ValidationError(f"{name} must be one-dimensional")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{name} must be finite")
    return arr


def _check_unit_grid(xs: np.ndarray, name: str) -> None:
    if xs.size < 2:
        raise ValidationError(f"{name} needs at least two points")
    if xs[0] != 0.0 or xs[-1] != 1.0:
        raise ValidationError(f"{name} must start at 0 and end at 1")
    if np.any(np.diff(xs) <= 0):
        raise ValidationError(f"{name} must be strictly increasing")


class Potential:
    """Base class; concrete subclasses are frozen dataclasses."""

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        x_arr = np.asarray(x, dtype=float)
        if np.any((x_arr < 0.0) | (x_arr > 1.0)) or np.any(np.isnan(x_arr)):
            raise DomainError(f"x must lie in [0, 1], got {x!r}")
        out = self._evaluate(x_arr)
        return float(out) if np.ndim(out) == 0 else out

    def _evaluate(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def l1_norm(self) -> float:
        raise NotImplementedError

    def breakpoints(self) -> list[float]:
        raise NotImplementedError

    def constant_pieces(self) -> Optional[tuple[np.ndarray, np.ndarray]]:
        """``(breakpoints, values)`` if q is piecewise constant, else None."""
        return None

    def to_dict(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class Zero(Potential):
    def _evaluate(self, x):
        return np.zeros_like(x)

    def l1_norm(self):
        return 0.0

    def breakpoints(self):
        return [0.0, 1.0]

    def constant_pieces(self):
        return np.array([0.0, 1.0]), np.array([0.0])

    def to_dict(self):
        return {"type": "zero"}


@dataclass(frozen=True)
class Constant(Potential):
    value: float

    def __post_init__(self):
        if not np.isfinite(self.value):
            raise ValidationError("constant potential value must be finite")
        object.__setattr__(self, "value", float(self.value))

    def _evaluate(self, x):
        return np.full_like(x, self.value)

    def l1_norm(self):
        return abs(self.value)

    def breakpoints(self):
        return [0.0, 1.0]

    def constant_pieces(self):
        return np.array([0.0, 1.0]), np.array([self.value])

    def to_dict(self):
        return {"type": "constant", "value": self.value}


@dataclass(frozen=True, eq=False)
class PiecewiseConstant(Potential):
    """q = values[i] on [breakpoints[i], breakpoints[i+1])."""

    breakpoints_: np.ndarray
    values: np.ndarray

    def __init__(self, breakpoints: Sequence[float], values: Sequence[float]):
        bp = _as_grid(breakpoints, "breakpoints")
        vals = _as_grid(values, "values")
        _check_unit_grid(bp, "breakpoints")
        if vals.size != bp.size - 1:
            raise ValidationError("need exactly one value per subinterval")
        bp.setflags(write=False)
        vals.setflags(write=False)
        object.__setattr__(self, "breakpoints_", bp)
        object.__setattr__(self, "values", vals)

    def __eq__(self, other):
        return (
            isinstance(other, PiecewiseConstant)
            and np.array_equal(self.breakpoints_, other.breakpoints_)
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self):
        return hash((self.breakpoints_.tobytes(), self.values.tobytes()))

    def __repr__(self):
        return f"PiecewiseConstant({self.breakpoints_.tolist()}, {self.values.tolist()})"

    def _evaluate(self, x):
        idx = np.searchsorted(self.breakpoints_, x, side="right") - 1
        idx = np.clip(idx, 0, self.values.size - 1)
        return self.values[idx]

    def l1_norm(self):
        return float(np.sum(np.abs(self.values) * np.diff(self.breakpoints_)))

    def breakpoints(self):
        return self.breakpoints_.tolist()

    def constant_pieces(self):
        return self.breakpoints_, self.values

    def to_dict(self):
        return {
            "type": "piecewise_constant",
            "breakpoints": self.breakpoints_.tolist(),
            "values": self.values.tolist(),
        }


@dataclass(frozen=True, eq=False)
class Sampled(Potential):
    """Samples ``qs`` at ``xs`` joined by straight lines."""

    xs: np.ndarray
    qs: np.ndarray

    def __init__(self, xs: Sequence[float], qs: Sequence[float]):
        x = _as_grid(xs, "xs")
        q = _as_grid(qs, "qs")
        _check_unit_grid(x, "xs")
        if q.size != x.size:
            raise ValidationError("xs and qs must have the same length")
        x.setflags(write=False)
        q.setflags(write=False)
        object.__setattr__(self, "xs", x)
        object.__setattr__(self, "qs", q)

    def __eq__(self, other):
        return (
            isinstance(other, Sampled)
            and np.array_equal(self.xs, other.xs)
            and np.array_equal(self.qs, other.qs)
        )

    def __hash__(self):
        return hash((self.xs.tobytes(), self.qs.tobytes()))

    def __repr__(self):
        return f"Sampled(<{self.xs.size} points>)"

    def _evaluate(self, x):
        return np.interp(x, self.xs, self.qs)

    def l1_norm(self):
        return float(np.trapezoid(np.abs(self.qs), self.xs))

    def breakpoints(self):
        return self.xs.tolist()

    def to_dict(self):
        return {"type": "sampled", "xs": self.xs.tolist(), "qs": self.qs.tolist()}


def evaluate(p: Potential, x):
    """Value of q at x (scalar or array) under the representation's convention."""
    return p.evaluate(x)


def l1_norm(p: Potential) -> float:
    return p.l1_norm()


def breakpoints(p: Potential) -> list[float]:
    return p.breakpoints()


_KEYS = {
    "zero": {"type"},
    "constant": {"type", "value"},
    "piecewise_constant": {"type", "breakpoints", "values"},
    "sampled": {"type", "xs", "qs"},
}


def potential_from_dict(obj: dict) -> Potential:
    """Inverse of ``Potential.to_dict``; rejects unknown keys."""
    if not isinstance(obj, dict):
        raise ValidationError("potential must be a JSON object")
    kind = obj.get("type")
    if kind not in _KEYS:
        raise ValidationError(f"potential.type must be one of {sorted(_KEYS)}, got {kind!r}")
    extra = set(obj) - _KEYS[kind]
    missing = _KEYS[kind] - set(obj)
    if extra:
        raise ValidationError(f"potential: unknown keys {sorted(extra)}")
    if missing:
        raise ValidationError(f"potential: missing keys {sorted(missing)}")
    try:
        if kind == "zero":
            return Zero()
        if kind == "constant":
            return Constant(float(obj["value"]))
        if kind == "piecewise_constant":
            return PiecewiseConstant(obj["breakpoints"], obj["values"])
        return Sampled(obj["xs"], obj["qs"])
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"potential: {exc}") from exc
