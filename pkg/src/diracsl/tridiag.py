"""Symmetric tridiagonal eigenvalues by Sturm-count bisection."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .tolerances import DEFAULT_TOLERANCES, Tolerances

__all__ = ["SymTridiag", "sturm_count", "gershgorin_bounds", "eigenvalues"]

_EPS = 2.0**-52


@dataclass(frozen=True, eq=False)
class SymTridiag:
    diag: np.ndarray
    offdiag: np.ndarray

    def __init__(self, diag: Sequence[float], offdiag: Sequence[float] = ()):
        d = np.asarray(diag, dtype=float).reshape(-1)
        e = np.asarray(offdiag, dtype=float).reshape(-1)
        if d.size == 0:
            raise ValueError("empty matrix")
        if e.size != d.size - 1:
            raise ValueError("offdiag must have length n - 1")
        if not (np.all(np.isfinite(d)) and np.all(np.isfinite(e))):
            raise ValueError("entries must be finite")
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "offdiag", e)

    @classmethod
    def from_dense(cls, A) -> "SymTridiag":
        A = np.asarray(A, dtype=float)
        return cls(np.diag(A), np.diag(A, 1))

    @property
    def n(self) -> int:
        return int(self.diag.size)

    @property
    def scale(self) -> float:
        return max(1.0, float(np.max(np.abs(self.diag))), float(np.max(np.abs(self.offdiag), initial=0.0)))

    def to_dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)


def sturm_count(T: SymTridiag, mu: float) -> int:
    """Number of eigenvalues of T strictly below mu (LDL^T inertia)."""
    pivmin = _EPS * T.scale
    e2 = T.offdiag**2
    count = 0
    d = T.diag[0] - mu
    for k in range(T.n):
        if k > 0:
            d = T.diag[k] - mu - e2[k - 1] / d
        if abs(d) < pivmin:
            d = -pivmin if d < 0 else pivmin
        if d < 0:
            count += 1
    return count


def gershgorin_bounds(T: SymTridiag) -> tuple[float, float]:
    r = np.zeros(T.n)
    r[:-1] += np.abs(T.offdiag)
    r[1:] += np.abs(T.offdiag)
    return float(np.min(T.diag - r)), float(np.max(T.diag + r))


def _charpoly_and_derivative(T: SymTridiag, lam: float) -> tuple[float, float]:
    # det(T - lam I) and its lam-derivative via the three-term recurrence
    p_prev, p = 1.0, T.diag[0] - lam
    dp_prev, dp = 0.0, -1.0
    for k in range(1, T.n):
        e2 = T.offdiag[k - 1] ** 2
        p_new = (T.diag[k] - lam) * p - e2 * p_prev
        dp_new = -p + (T.diag[k] - lam) * dp - e2 * dp_prev
        p_prev, p = p, p_new
        dp_prev, dp = dp, dp_new
    return p, dp


def eigenvalues(T: SymTridiag, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """All eigenvalues, ascending, with multiplicity.

    Each eigenvalue is isolated by bisection on ``sturm_count`` from the
    Gershgorin interval down to width ``tol.root * scale``, then polished
    with one Newton step that is kept only if it stays inside the bracket.
    """
    lo0, hi0 = gershgorin_bounds(T)
    scale = max(T.scale, abs(lo0), abs(hi0))
    width = tol.root * scale
    lo0 -= width
    hi0 += width
    out = np.empty(T.n)
    for k in range(T.n):
        lo, hi = lo0, hi0
        # invariant: count(lo) <= k < count(hi)
        while hi - lo > width:
            mid = 0.5 * (lo + hi)
            if mid == lo or mid == hi:
                break
            if sturm_count(T, mid) > k:
                hi = mid
            else:
                lo = mid
        lam = 0.5 * (lo + hi)
        p, dp = _charpoly_and_derivative(T, lam)
        if dp != 0.0 and np.isfinite(p / dp):
            cand = lam - p / dp
            if lo <= cand <= hi:
                lam = cand
        out[k] = lam
    return out
