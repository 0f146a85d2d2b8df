"""Hypothesis checks, spectrum classification and eigenfunction assembly.

The spectrum of -y'' + q y = lam (sum m_i delta(x - t_i)) y with
Dirichlet conditions is one of

* all of C, when every D_{1,t_i} and D_{t_i,0} vanishes (H1);
* a finite set of real numbers, the real roots of p(lam), of size n when
  (H) holds (with 0 included exactly when (H0) fails) and smaller otherwise.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from numpy.polynomial import polynomial as P

from .assembly import (
    CoefficientChain,
    DiracWeight,
    characteristic_polynomial,
    coefficient_chain,
    discriminant,
    scaled_discriminant,
    tridiagonal_system,
)
from .errors import DomainError, InconsistencyError
from .fundamental import FundamentalBasis
from .polynomial import RealPolynomial
from .tolerances import DEFAULT_TOLERANCES, Tolerances
from .tridiag import SymTridiag, eigenvalues as tridiag_eigenvalues

__all__ = [
    "HypothesisReport",
    "SpectrumKind",
    "Spectrum",
    "Eigenfunction",
    "check_hypotheses",
    "reduced_characteristic_polynomial",
    "real_polynomial_roots",
    "companion_roots",
    "classify_spectrum",
    "eigenfunction",
]


@dataclass(frozen=True)
class HypothesisReport:
    """Booleans for (H0), (H), (H1) with the scaled margins behind them.

    ``h_margin`` is the smallest scaled |D_{t_{k+1},t_k}|; ``h1_margin`` is
    the largest scaled |D_{1,t_i}|, |D_{t_i,0}| (H1 needs all of them ~ 0).
    """

    h0: bool
    h0_margin: float
    h: bool
    h_margin: float
    h1: bool
    h1_margin: float
    consecutive: tuple
    to_end: tuple
    from_start: tuple
    d10: float

    def margins(self) -> dict:
        return {"h0": self.h0_margin, "h": self.h_margin, "h1": self.h1_margin}


class SpectrumKind(enum.Enum):
    FINITE = "finite"
    ALL_COMPLEX = "all_complex"


@dataclass(frozen=True)
class Spectrum:
    kind: SpectrumKind
    eigenvalues: tuple = ()
    method: str = "charpoly"
    polynomial: Optional[RealPolynomial] = field(default=None, compare=False, repr=False)
    crosscheck: Optional[float] = field(default=None, compare=False)
    max_imag: float = field(default=0.0, compare=False)

    @property
    def is_finite(self) -> bool:
        return self.kind is SpectrumKind.FINITE

    def __len__(self):
        return len(self.eigenvalues)


def check_hypotheses(basis: FundamentalBasis, w: DiracWeight, tol: Tolerances = DEFAULT_TOLERANCES) -> HypothesisReport:
    ts = w.partition()
    n = w.n
    consecutive = tuple(discriminant(basis, float(ts[k]), float(ts[k + 1])) for k in range(n + 1))
    cons_margin = [scaled_discriminant(basis, float(ts[k]), float(ts[k + 1])) for k in range(n + 1)]
    to_end = tuple(discriminant(basis, float(t), 1.0) for t in w.nodes)
    from_start = tuple(discriminant(basis, 0.0, float(t)) for t in w.nodes)
    end_margins = [scaled_discriminant(basis, float(t), 1.0) for t in w.nodes]
    start_margins = [scaled_discriminant(basis, 0.0, float(t)) for t in w.nodes]

    # (H0) is settled by the basis construction so the two never disagree
    h0 = basis.is_case_one
    h0_margin = scaled_discriminant(basis, 0.0, 1.0)
    h_margin = float(min(cons_margin))
    h = h_margin > tol.zero_det
    h1_margin = float(max(end_margins + start_margins, default=0.0))
    h1 = (not h0) and h1_margin <= tol.zero_det
    return HypothesisReport(
        h0=h0,
        h0_margin=h0_margin,
        h=h,
        h_margin=h_margin,
        h1=h1,
        h1_margin=h1_margin,
        consecutive=consecutive,
        to_end=to_end,
        from_start=from_start,
        d10=discriminant(basis, 0.0, 1.0),
    )


def reduced_characteristic_polynomial(
    basis: FundamentalBasis,
    w: DiracWeight,
    report: HypothesisReport,
    tol: Tolerances = DEFAULT_TOLERANCES,
    chain: Optional[CoefficientChain] = None,
) -> RealPolynomial:
    """p(lam) with its degree fixed by the hypotheses.

    With (H) the degree is exactly n.  Without it the lam^n coefficient is a
    multiple of prod D_{t_k,t_{k-1}} = 0 and is dropped, and further leading
    coefficients are dropped while numerically zero.
    """
    p = characteristic_polynomial(basis, w, chain)
    if report.h:
        return p.reduced(0.0, max_degree=w.n)
    return p.reduced(tol.zero_det, max_degree=max(w.n - 1, 0))


def companion_roots(p: RealPolynomial) -> np.ndarray:
    """All complex roots of p (zero roots from vanishing low coefficients kept exactly)."""
    c = np.trim_zeros(p.coeffs, "b")
    if c.size <= 1:
        return np.array([], dtype=complex)
    nz = int(np.argmax(c != 0))
    roots = P.polyroots(c[nz:]) if c.size - nz > 1 else np.array([], dtype=complex)
    return np.concatenate([np.zeros(nz, dtype=complex), np.asarray(roots, dtype=complex)])


def _polish(p: RealPolynomial, x: float, steps: int = 3) -> float:
    dp = p.derivative()
    for _ in range(steps):
        d = dp(x)
        if d == 0.0:
            break
        step = p(x) / d
        if not np.isfinite(step):
            break
        x_new = x - step
        if abs(p(x_new)) > abs(p(x)):
            break
        x = x_new
    return float(x)


def _dedup(values: np.ndarray, rel: float) -> np.ndarray:
    if values.size == 0:
        return values
    values = np.sort(values)
    keep = [values[0]]
    for v in values[1:]:
        if abs(v - keep[-1]) > rel * (1.0 + abs(v)):
            keep.append(v)
    return np.array(keep)


def real_polynomial_roots(p: RealPolynomial, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Sorted distinct real roots of p.

    Companion-matrix roots whose imaginary part is below ``tol.imag``
    (relative) are treated as real, polished by Newton, deduplicated at
    ``tol.dedup`` and checked against ``|p(x)| <= tol.residual * sum|c_j||x|^j``.
    """
    if p.is_zero_poly():
        raise DomainError("identically-zero polynomial has no isolated roots")
    z = companion_roots(p)
    real = z[np.abs(z.imag) <= tol.imag * np.maximum(1.0, np.abs(z))].real
    polished = np.array([_polish(p, float(x)) for x in real])
    roots = _dedup(polished, tol.dedup)
    for x in roots:
        if abs(p(x)) > tol.residual * max(p.eval_scale(x), np.finfo(float).tiny):
            raise InconsistencyError(f"root {x!r} fails residual check: |p| = {abs(p(x)):.3e}")
    return roots


def classify_spectrum(
    basis: FundamentalBasis,
    w: DiracWeight,
    tol: Tolerances = DEFAULT_TOLERANCES,
    method: str = "auto",
) -> tuple[HypothesisReport, Spectrum]:
    """Classify the Dirichlet spectrum and extract eigenvalues.

    ``method`` is ``"auto"`` (tridiagonal when (H) holds, polynomial
    otherwise), ``"charpoly"`` or ``"tridiag"``.  When both routes are
    available their largest disagreement is stored in ``Spectrum.crosscheck``.
    """
    if method not in ("auto", "charpoly", "tridiag"):
        raise ValueError(f"unknown method {method!r}")
    report = check_hypotheses(basis, w, tol)
    chain = coefficient_chain(basis, w)
    raw = characteristic_polynomial(basis, w, chain)

    if report.h1:
        if not raw.is_negligible(tol.zero_det):
            raise InconsistencyError(
                f"(H1) holds (margin {report.h1_margin:.3e}) but p(lam) is not identically zero: {raw.coeffs.tolist()}"
            )
        return report, Spectrum(SpectrumKind.ALL_COMPLEX, (), "charpoly", raw)

    p = reduced_characteristic_polynomial(basis, w, report, tol, chain)
    if p.is_negligible(tol.zero_det):
        raise InconsistencyError(f"p(lam) degenerates to zero but (H1) fails; margins {report.margins()}")
    if method == "tridiag" and not (report.h and w.n >= 1):
        # raises TridiagonalUnavailable with the failing margin
        tridiagonal_system(basis, w, tol)

    z = companion_roots(p)
    scale = max(1.0, float(np.max(np.abs(z)))) if z.size else 1.0
    max_imag = float(np.max(np.abs(z.imag))) / scale if z.size else 0.0

    poly_roots = real_polynomial_roots(p, tol) if p.degree > 0 else np.array([])
    eig = poly_roots
    used = "charpoly"
    crosscheck = None
    if report.h and w.n >= 1 and method in ("auto", "tridiag"):
        T = tridiagonal_system(basis, w, tol)
        tri = tridiag_eigenvalues(SymTridiag(T.sym_diag, T.sym_offdiag), tol)
        if not report.h0:
            # X is singular here; pin the eigenvalue nearest 0 to the exact root
            tri[np.argmin(np.abs(tri))] = 0.0
        if tri.size == poly_roots.size:
            crosscheck = float(np.max(np.abs(tri - poly_roots), initial=0.0))
        eig = tri
        used = "tridiag"

    eig = np.sort(eig)
    _check_counts(report, w, eig, tol)
    return report, Spectrum(SpectrumKind.FINITE, tuple(float(v) for v in eig), used, p, crosscheck, max_imag)


def _check_counts(report: HypothesisReport, w: DiracWeight, eig: np.ndarray, tol: Tolerances) -> None:
    n = w.n
    zero_in = bool(np.any(np.abs(eig) <= tol.dedup))
    if report.h and eig.size != n:
        raise InconsistencyError(f"(H) holds but {eig.size} eigenvalues found for n = {n}; margins {report.margins()}")
    if not report.h and n > 0 and eig.size >= n:
        raise InconsistencyError(f"(H) fails but {eig.size} eigenvalues found for n = {n}; margins {report.margins()}")
    if eig.size and len(np.unique(eig)) != eig.size:
        raise InconsistencyError("repeated eigenvalue")
    if report.h0 and zero_in:
        raise InconsistencyError(f"(H0) holds but 0 is an eigenvalue; margins {report.margins()}")
    if not report.h0 and n > 0 and not zero_in:
        raise InconsistencyError(f"(H0) fails but 0 is not an eigenvalue; margins {report.margins()}")


@dataclass(frozen=True)
class Eigenfunction:
    """E(x) = alpha_i phi(x) + beta_i psi(x) on [t_i, t_{i+1}], with (alpha_0, beta_0) = (1, 0)."""

    lam: float
    pieces: np.ndarray
    partition: np.ndarray
    masses: np.ndarray
    basis: FundamentalBasis = field(repr=False)
    residual: float = 0.0

    def _piece_index(self, x: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(self.partition, x, side="right") - 1
        return np.clip(idx, 0, self.pieces.shape[0] - 1)

    def evaluate(self, x, side: str = "right"):
        """Values and derivatives; at nodes ``side`` picks the one-sided derivative."""
        x_arr = np.asarray(x, dtype=float)
        if side == "left":
            idx = np.clip(np.searchsorted(self.partition, x_arr, side="left") - 1, 0, self.pieces.shape[0] - 1)
        else:
            idx = self._piece_index(x_arr)
        p, dp = self.basis.phi(x_arr)
        s, ds = self.basis.psi(x_arr)
        a = self.pieces[idx, 0]
        b = self.pieces[idx, 1]
        return a * p + b * s, a * dp + b * ds

    def __call__(self, x):
        return self.evaluate(x)[0]

    def jump_residuals(self) -> np.ndarray:
        """y'(t_j^-) - y'(t_j^+) - lam m_j y(t_j) at each node."""
        t = self.partition[1:-1]
        if t.size == 0:
            return np.array([])
        y, dl = self.evaluate(t, side="left")
        _, dr = self.evaluate(t, side="right")
        return dl - dr - self.lam * self.masses * y

    def continuity_residuals(self) -> np.ndarray:
        t = self.partition[1:-1]
        if t.size == 0:
            return np.array([])
        yl, _ = self.evaluate(t, side="left")
        yr, _ = self.evaluate(t, side="right")
        return yl - yr


def eigenfunction(
    basis: FundamentalBasis, w: DiracWeight, lam: float, tol: Tolerances = DEFAULT_TOLERANCES, rtol: float = 1e-7
) -> Eigenfunction:
    """Assemble the eigenfunction for an eigenvalue lam (leading piece is phi)."""
    chain = coefficient_chain(basis, w)
    pieces = chain.at(lam)
    p = characteristic_polynomial(basis, w, chain)
    res = abs(p(lam))
    bound = rtol * max(p.eval_scale(lam), P.polyval(abs(lam), p.scale))
    if res > bound:
        raise DomainError(f"lam = {lam!r} is not an eigenvalue: |p(lam)| = {res:.3e} > {bound:.3e}")
    return Eigenfunction(float(lam), pieces, w.partition(), w.masses.copy(), basis, float(res))
