"""Shooting oracle: integrate y(0)=0, y'(0)=1 across [0,1] applying the
derivative jumps y'(t_j^+) = y'(t_j^-) - lam m_j y(t_j), and read off y(1).

This path never touches the fundamental basis, discriminants or transfer
matrices, so it checks the spectral assembly independently.
"""
from __future__ import annotations

from typing import Optional

import numpy as np
from scipy.optimize import brentq

from .assembly import DiracWeight
from .errors import NumericalFailure
from .fundamental import propagator_matrix
from .potential import Potential
from .tolerances import DEFAULT_TOLERANCES, Tolerances

__all__ = ["MissFunction", "miss", "scan_spectrum", "default_window"]


class MissFunction:
    """lam -> y(1; lam).  Vectorized over lam.

    The segment propagators between consecutive nodes do not depend on lam,
    so they are computed once.
    """

    def __init__(self, q: Potential, w: DiracWeight, tol: Tolerances = DEFAULT_TOLERANCES):
        self.q = q
        self.w = w
        ts = w.partition()
        self._segments = [propagator_matrix(q, float(a), float(b), tol) for a, b in zip(ts[:-1], ts[1:])]

    def __call__(self, lam):
        lam_arr = np.asarray(lam, dtype=float)
        y = np.zeros_like(lam_arr)
        dy = np.ones_like(lam_arr)
        for k, seg in enumerate(self._segments):
            y, dy = seg[0, 0] * y + seg[0, 1] * dy, seg[1, 0] * y + seg[1, 1] * dy
            if k < self.w.n:
                dy = dy - lam_arr * self.w.masses[k] * y
        if not np.all(np.isfinite(y)):
            raise NumericalFailure("shooting produced non-finite values")
        return float(y) if y.ndim == 0 else y

    def profile(self, lam: float, samples: int = 401, tol: Tolerances = DEFAULT_TOLERANCES):
        """(x, y) of the shot solution on a grid including every node."""
        ts = self.w.partition()
        grid = np.union1d(np.linspace(0.0, 1.0, samples), ts)
        ys = np.empty_like(grid)
        y, dy = 0.0, 1.0
        seg = 0
        for i, x in enumerate(grid):
            while seg < self.w.n + 1 and x > ts[seg + 1]:
                M = self._segments[seg]
                y, dy = M[0, 0] * y + M[0, 1] * dy, M[1, 0] * y + M[1, 1] * dy
                if seg < self.w.n:
                    dy -= lam * self.w.masses[seg] * y
                seg += 1
            M = propagator_matrix(self.q, float(ts[seg]), float(x), tol)
            ys[i] = M[0, 0] * y + M[0, 1] * dy
        return grid, ys


def miss(q: Potential, w: DiracWeight, lam, tol: Tolerances = DEFAULT_TOLERANCES):
    """Terminal value y(1; lam) of the jump initial-value problem."""
    return MissFunction(q, w, tol)(lam)


def default_window(w: DiracWeight) -> tuple[float, float]:
    """Heuristic scan window [-10, 10] * max(1, n^2 / (min gap * sum m))."""
    if w.n == 0:
        return -10.0, 10.0
    gap = float(np.min(np.diff(w.partition())))
    r = max(1.0, w.n**2 / (gap * float(np.sum(w.masses))))
    return -10.0 * r, 10.0 * r


def scan_spectrum(
    q: Potential,
    w: DiracWeight,
    lambda_lo: Optional[float] = None,
    lambda_hi: Optional[float] = None,
    samples: int = 2001,
    tol: Tolerances = DEFAULT_TOLERANCES,
    f: Optional[MissFunction] = None,
) -> np.ndarray:
    """Sign-change roots of the miss function in [lambda_lo, lambda_hi].

    Roots of even multiplicity, and pairs closer than the sample spacing,
    are invisible to a sign scan.
    """
    if lambda_lo is None or lambda_hi is None:
        lo, hi = default_window(w)
        lambda_lo = lo if lambda_lo is None else lambda_lo
        lambda_hi = hi if lambda_hi is None else lambda_hi
    if not lambda_lo < lambda_hi:
        raise ValueError("need lambda_lo < lambda_hi")
    if samples < 2:
        raise ValueError("need at least two samples")
    f = f or MissFunction(q, w, tol)
    grid = np.linspace(lambda_lo, lambda_hi, samples)
    vals = f(grid)
    scale = max(1.0, abs(lambda_lo), abs(lambda_hi))
    xtol = tol.root * scale
    roots = [float(x) for x, v in zip(grid, vals) if v == 0.0]
    sgn = np.sign(vals)
    for i in np.nonzero(sgn[:-1] * sgn[1:] < 0)[0]:
        roots.append(brentq(f, grid[i], grid[i + 1], xtol=xtol, rtol=4 * np.finfo(float).eps))
    roots = np.sort(np.array(roots))
    if roots.size > 1:
        keep = np.concatenate([[True], np.diff(roots) > 10 * xtol])
        roots = roots[keep]
    return roots
