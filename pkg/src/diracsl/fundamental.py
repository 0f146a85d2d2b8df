"""Fundamental solutions of -y'' + q y = 0 on [0, 1].

Piecewise-constant potentials are propagated exactly with the 2x2
trigonometric / hyperbolic / linear propagators.  Sampled potentials go
through scipy's DOP853 (embedded Runge-Kutta 8(5,3)) with dense output.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .errors import DomainError, NumericalFailure
from .potential import Potential
from .tolerances import DEFAULT_TOLERANCES, Tolerances

__all__ = [
    "State",
    "CaseTag",
    "SolutionCurve",
    "FundamentalBasis",
    "propagate_state",
    "propagator_matrix",
    "build_basis",
]


@dataclass(frozen=True)
class State:
    x: float
    y: float
    dy: float

    def __post_init__(self):
        if not (np.isfinite(self.x) and np.isfinite(self.y) and np.isfinite(self.dy)):
            raise NumericalFailure(f"non-finite state {self!r}")


class CaseTag(enum.Enum):
    CASE_I = "CaseI"
    CASE_II = "CaseII"


def _constant_step(c, h, y, dy):
    """Exact solution of y'' = c y after a step h (arrays broadcast)."""
    c = np.asarray(c, dtype=float)
    h = np.asarray(h, dtype=float)
    k = np.sqrt(np.abs(c))
    kh = k * h
    # sin(kh)/k and sinh(kh)/k, with the c = 0 limit h
    safe_k = np.where(k > 0, k, 1.0)
    osc = c < 0
    hyp = c > 0
    cs = np.where(osc, np.cos(kh), np.where(hyp, np.cosh(kh), 1.0))
    sn_over_k = np.where(osc, np.sin(kh) / safe_k, np.where(hyp, np.sinh(kh) / safe_k, h))
    k_sn = np.where(osc, -k * np.sin(kh), np.where(hyp, k * np.sinh(kh), 0.0))
    return cs * y + sn_over_k * dy, k_sn * y + cs * dy


def _check_unit(x: float, name: str) -> None:
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"{name} must lie in [0, 1], got {x!r}")


def _rhs(q: Potential):
    xs, qs = q.xs, q.qs

    def f(x, u):
        return np.array([u[1], np.interp(x, xs, qs) * u[0]])

    return f


def _integrate(q: Potential, x0: float, u0, x1: float, tol: Tolerances, dense: bool = False):
    sol = solve_ivp(
        _rhs(q),
        (x0, x1),
        np.asarray(u0, dtype=float),
        method="DOP853",
        rtol=tol.ode_rel,
        atol=tol.ode_abs,
        dense_output=dense,
    )
    if not sol.success or not np.all(np.isfinite(sol.y)):
        raise NumericalFailure(f"integration from {x0} to {x1} failed: {sol.message}")
    return sol


def propagate_state(
    q: Potential, s0: State, x_target: float, tol: Tolerances = DEFAULT_TOLERANCES
) -> State:
    """Carry the solution through ``s0`` to ``x_target`` (either direction)."""
    _check_unit(s0.x, "s0.x")
    _check_unit(x_target, "x_target")
    pieces = q.constant_pieces()
    if s0.x == x_target:
        return State(x_target, s0.y, s0.dy)
    if pieces is None:
        sol = _integrate(q, s0.x, [s0.y, s0.dy], x_target, tol)
        return State(x_target, float(sol.y[0, -1]), float(sol.y[1, -1]))

    bp, vals = pieces
    y, dy, x = s0.y, s0.dy, s0.x
    forward = x_target > x
    inner = bp[1:-1]
    if forward:
        stops = [b for b in inner if x < b < x_target] + [x_target]
    else:
        stops = [b for b in inner[::-1] if x_target < b < x] + [x_target]
    for stop in stops:
        mid = 0.5 * (x + stop)
        c = vals[min(np.searchsorted(bp, mid, side="right") - 1, vals.size - 1)]
        y, dy = _constant_step(c, stop - x, y, dy)
        y, dy = float(y), float(dy)
        x = stop
    if not (np.isfinite(y) and np.isfinite(dy)):
        raise NumericalFailure("propagation overflowed")
    return State(x_target, y, dy)


def propagator_matrix(q: Potential, x0: float, x1: float, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """2x2 matrix mapping (y, y') at x0 to (y, y') at x1."""
    a = propagate_state(q, State(x0, 1.0, 0.0), x1, tol)
    b = propagate_state(q, State(x0, 0.0, 1.0), x1, tol)
    return np.array([[a.y, b.y], [a.dy, b.dy]])


class SolutionCurve:
    """A single solution of -y''+qy=0 over [0,1], evaluable anywhere.

    Calling the curve on x returns ``(y(x), y'(x))``.  For piecewise
    constant q the states at every breakpoint are computed once at
    construction and each evaluation is a single closed-form step.
    """

    def __init__(self, q: Potential, anchor: State, tol: Tolerances = DEFAULT_TOLERANCES):
        self.q = q
        self.anchor = anchor
        pieces = q.constant_pieces()
        if pieces is not None:
            bp, vals = pieces
            ys = np.empty(bp.size)
            dys = np.empty(bp.size)
            for i, b in enumerate(bp):
                s = propagate_state(q, anchor, float(b), tol)
                ys[i], dys[i] = s.y, s.dy
            self._bp, self._vals, self._ys, self._dys = bp, vals, ys, dys
            self._dense = None
        else:
            self._dense = []
            if anchor.x > 0.0:
                self._dense.append(_integrate(q, anchor.x, [anchor.y, anchor.dy], 0.0, tol, dense=True).sol)
            if anchor.x < 1.0:
                self._dense.append(_integrate(q, anchor.x, [anchor.y, anchor.dy], 1.0, tol, dense=True).sol)

    def __call__(self, x):
        x_arr = np.asarray(x, dtype=float)
        if np.any((x_arr < 0.0) | (x_arr > 1.0)):
            raise DomainError("evaluation point outside [0, 1]")
        if self._dense is None:
            idx = np.clip(np.searchsorted(self._bp, x_arr, side="right") - 1, 0, self._vals.size - 1)
            y, dy = _constant_step(self._vals[idx], x_arr - self._bp[idx], self._ys[idx], self._dys[idx])
        else:
            flat = np.atleast_1d(x_arr).reshape(-1)
            u = np.empty((2, flat.size))
            if len(self._dense) == 1:
                u[:] = self._dense[0](flat)
            else:
                left = flat < self.anchor.x
                if np.any(left):
                    u[:, left] = self._dense[0](flat[left])
                if np.any(~left):
                    u[:, ~left] = self._dense[1](flat[~left])
            u[:, flat == self.anchor.x] = [[self.anchor.y], [self.anchor.dy]]
            y = u[0].reshape(x_arr.shape)
            dy = u[1].reshape(x_arr.shape)
        if np.ndim(y) == 0:
            return float(y), float(dy)
        return y, dy

    def value(self, x):
        return self(x)[0]

    def derivative(self, x):
        return self(x)[1]

    def sup_abs(self, samples: int = 257) -> float:
        grid = np.linspace(0.0, 1.0, samples)
        if self._dense is None:
            grid = np.union1d(grid, self._bp)
        return float(np.max(np.abs(self.value(grid))))


@dataclass(frozen=True)
class FundamentalBasis:
    """The pair (phi, psi) with Wronskian omega = phi psi' - phi' psi.

    Case I  (phi(1) != 0): phi(0)=0, phi'(0)=1, psi(1)=0, psi'(1)=-1.
    Case II (phi(1) == 0): phi as above, psi(1)=1, psi'(1)=0.
    """

    q: Potential
    phi: SolutionCurve
    psi: SolutionCurve
    omega: float
    case_tag: CaseTag
    phi_sup: float
    psi_sup: float
    h0_margin: float

    @property
    def is_case_one(self) -> bool:
        return self.case_tag is CaseTag.CASE_I

    def wronskian(self, x):
        p, dp = self.phi(x)
        s, ds = self.psi(x)
        return p * ds - dp * s

    @property
    def phi_end(self) -> float:
        """phi(1), exactly 0 in Case II by construction."""
        return self.phi.value(1.0) if self.is_case_one else 0.0

    @property
    def psi_end(self) -> float:
        """psi(1): 0 in Case I, 1 in Case II."""
        return 0.0 if self.is_case_one else 1.0


def build_basis(q: Potential, tol: Tolerances = DEFAULT_TOLERANCES) -> FundamentalBasis:
    """Construct the Case I / Case II fundamental pair for q."""
    phi = SolutionCurve(q, State(0.0, 0.0, 1.0), tol)
    phi1, dphi1 = phi(1.0)
    phi_sup = phi.sup_abs()
    h0_margin = abs(phi1) / max(1.0, phi_sup)
    if h0_margin > tol.zero_det:
        psi = SolutionCurve(q, State(1.0, 0.0, -1.0), tol)
        omega = phi1 * (-1.0) - dphi1 * 0.0
        tag = CaseTag.CASE_I
    else:
        psi = SolutionCurve(q, State(1.0, 1.0, 0.0), tol)
        omega = phi1 * 0.0 - dphi1 * 1.0
        tag = CaseTag.CASE_II
    if omega == 0.0 or not np.isfinite(omega):
        raise NumericalFailure("degenerate Wronskian")
    return FundamentalBasis(q, phi, psi, float(omega), tag, phi_sup, psi.sup_abs(), h0_margin)
