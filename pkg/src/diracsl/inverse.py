"""Single-Dirac forward map and potential recovery.

For q whose Dirichlet problem is nonsingular and whose phi, psi do not
vanish inside (0, 1), the problem -y'' + q y = lam delta(x - t) y has the
single eigenvalue

    lam(t) = -omega / (phi(t) psi(t)) > 0,

and q is recovered from the whole curve by

    q = -1/2 lam''/lam + 3/4 (lam'/lam)^2 + 1/4 lam^2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import DomainError, EmptySpectrum, NumericalFailure, ValidationError, ZeroEigenvalueRegime
from .fundamental import FundamentalBasis, build_basis
from .potential import Potential, Sampled
from .quadrature import cumulative_adaptive_simpson
from .tolerances import DEFAULT_TOLERANCES, Tolerances

__all__ = [
    "forward_lambda",
    "forward_map",
    "spectral_curve",
    "SpectrumLikeFunction",
    "ClosedSpectrumLike",
    "SampledSpectrumLike",
    "ValidationReport",
    "central_differences",
    "fd_weights",
    "recover_q_values",
    "recover_potential",
    "validate_spectrum_like",
    "ReconstructedBasis",
    "reconstruct_basis",
]


# --------------------------------------------------------------------------
# forward map


def _forward_values(basis: FundamentalBasis, t: np.ndarray, tol: Tolerances) -> np.ndarray:
    if not basis.is_case_one:
        raise ZeroEigenvalueRegime(
            "phi(1) = 0: the Dirichlet problem for -y''+qy=0 is singular and the "
            "single-Dirac spectrum is {0} or all of C"
        )
    if np.any((t <= 0.0) | (t >= 1.0)):
        raise DomainError("node t must lie in (0, 1)")
    prod = basis.phi.value(t) * basis.psi.value(t)
    small = np.abs(prod) <= tol.zero_det * basis.phi_sup * basis.psi_sup
    if np.any(small):
        bad = np.atleast_1d(t)[np.atleast_1d(small)][0]
        raise EmptySpectrum(f"phi(t) psi(t) vanishes at t = {bad!r}: no eigenvalue")
    return -basis.omega / prod


def forward_lambda(
    q: Potential, t: float, tol: Tolerances = DEFAULT_TOLERANCES, basis: Optional[FundamentalBasis] = None
) -> float:
    """The eigenvalue of the single-Dirac problem with unit mass at t."""
    basis = basis or build_basis(q, tol)
    return float(_forward_values(basis, np.asarray(float(t)), tol))


def forward_map(
    q: Potential, ts: Sequence[float], tol: Tolerances = DEFAULT_TOLERANCES, basis: Optional[FundamentalBasis] = None
) -> np.ndarray:
    """lam(t) on a grid, sharing one fundamental basis."""
    basis = basis or build_basis(q, tol)
    return np.asarray(_forward_values(basis, np.asarray(ts, dtype=float), tol), dtype=float)


def spectral_curve(q: Potential, tol: Tolerances = DEFAULT_TOLERANCES) -> "ClosedSpectrumLike":
    """lam(t) of q with analytic first and second derivatives.

    With P = phi psi one has P' = phi' psi + phi psi' and, since phi'' = q phi
    and psi'' = q psi, P'' = 2 q P + 2 phi' psi'.
    """
    basis = build_basis(q, tol)
    _forward_values(basis, np.asarray(0.5), tol)  # regime check
    om = basis.omega

    def parts(t):
        t = np.asarray(t, dtype=float)
        y1, d1 = basis.phi(t)
        y2, d2 = basis.psi(t)
        P = y1 * y2
        dP = d1 * y2 + y1 * d2
        d2P = 2.0 * np.asarray(q.evaluate(t), dtype=float) * P + 2.0 * d1 * d2
        return P, dP, d2P

    def f(t):
        return _forward_values(basis, np.asarray(t, dtype=float), tol)

    def df(t):
        P, dP, _ = parts(t)
        return om * dP / P**2

    def d2f(t):
        P, dP, d2P = parts(t)
        return om * (d2P / P**2 - 2.0 * dP**2 / P**3)

    return ClosedSpectrumLike(f, df, d2f)


# --------------------------------------------------------------------------
# finite differences


def fd_weights(x0: float, xs: np.ndarray, order: int) -> np.ndarray:
    """Weights w with sum(w * f(xs)) ~ f^(order)(x0), exact for degree < len(xs)."""
    xs = np.asarray(xs, dtype=float)
    k = xs.size
    d = xs - x0
    V = np.vander(d, k, increasing=True).T
    rhs = np.zeros(k)
    rhs[order] = float(np.prod(np.arange(1, order + 1)))
    return np.linalg.solve(V, rhs)


def _grid_derivatives(ts: np.ndarray, fs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """First and second derivatives on a (possibly non-uniform) grid.

    Three-point central stencils inside; one-sided stencils at the ends
    (three points for f', four for f''), all second-order on uniform grids.
    """
    n = ts.size
    if n < 4:
        raise DomainError("need at least four samples for derivatives")
    d1 = np.empty(n)
    d2 = np.empty(n)
    for i in range(n):
        if i == 0:
            s1, s2 = slice(0, 3), slice(0, 4)
        elif i == n - 1:
            s1, s2 = slice(n - 3, n), slice(n - 4, n)
        else:
            s1 = s2 = slice(i - 1, i + 2)
        d1[i] = fd_weights(ts[i], ts[s1], 1) @ fs[s1]
        d2[i] = fd_weights(ts[i], ts[s2], 2) @ fs[s2]
    return d1, d2


def central_differences(f: Callable, t, h: float) -> tuple[np.ndarray, np.ndarray]:
    """(f'(t), f''(t)) by second-order central differences with step h."""
    t = np.asarray(t, dtype=float)
    fp, f0, fm = f(t + h), f(t), f(t - h)
    return (fp - fm) / (2.0 * h), (fp - 2.0 * f0 + fm) / (h * h)


# --------------------------------------------------------------------------
# spectrum-like functions


class SpectrumLikeFunction:
    """A candidate eigenvalue curve f on (0, 1)."""

    def value(self, t):
        raise NotImplementedError

    def derivatives(self, t) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        raise NotImplementedError

    def integral(self, a: float, xs) -> np.ndarray:
        """int_a^x f for each x."""
        raise NotImplementedError

    def endpoint_probes(self) -> tuple[np.ndarray, np.ndarray]:
        raise NotImplementedError

    def interior_grid(self) -> np.ndarray:
        raise NotImplementedError


@dataclass
class ClosedSpectrumLike(SpectrumLikeFunction):
    """f given as a callable, with optional analytic f' and f''.

    Missing derivatives fall back to Richardson-extrapolated central
    differences with step ``fd_step * min(t, 1 - t)``, relative to the
    distance from the nearer endpoint where f blows up.
    """

    f: Callable
    df: Optional[Callable] = None
    d2f: Optional[Callable] = None
    fd_step: float = 1e-2
    probes: tuple = (1e-2, 1e-3, 1e-4)
    quad_tol: float = 1e-10

    def value(self, t):
        return np.asarray(self.f(np.asarray(t, dtype=float)), dtype=float)

    def derivatives(self, t):
        t = np.asarray(t, dtype=float)
        f0 = self.value(t)
        if self.df is not None and self.d2f is not None:
            return f0, np.asarray(self.df(t), dtype=float), np.asarray(self.d2f(t), dtype=float)
        h = self.fd_step * np.minimum(t, 1.0 - t)
        a1, a2 = central_differences(self.value, t, h)
        b1, b2 = central_differences(self.value, t, 0.5 * h)
        # one Richardson step lifts both to fourth order
        d1 = (4.0 * b1 - a1) / 3.0
        d2 = (4.0 * b2 - a2) / 3.0
        if self.df is not None:
            d1 = np.asarray(self.df(t), dtype=float)
        if self.d2f is not None:
            d2 = np.asarray(self.d2f(t), dtype=float)
        return f0, d1, d2

    def integral(self, a, xs):
        return cumulative_adaptive_simpson(lambda s: float(self.value(s)), a, np.atleast_1d(xs), self.quad_tol)

    def endpoint_probes(self):
        p = np.asarray(self.probes, dtype=float)
        return p, 1.0 - p

    def interior_grid(self):
        return np.linspace(0.005, 0.995, 199)


@dataclass
class SampledSpectrumLike(SpectrumLikeFunction):
    """Samples of f on a strictly increasing interior grid."""

    ts: np.ndarray
    values: np.ndarray
    _spline: CubicSpline = field(init=False, repr=False)

    def __post_init__(self):
        self.ts = np.asarray(self.ts, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.ts.ndim != 1 or self.ts.size != self.values.size:
            raise ValidationError("ts and values must be one-dimensional and equally long")
        if self.ts.size < 4:
            raise ValidationError("need at least four samples")
        if np.any(np.diff(self.ts) <= 0):
            raise ValidationError("t must be strictly increasing")
        if self.ts[0] <= 0.0 or self.ts[-1] >= 1.0:
            raise ValidationError("t must lie in the open interval (0, 1)")
        if not np.all(np.isfinite(self.values)):
            raise ValidationError("lambda values must be finite")
        self._spline = CubicSpline(self.ts, self.values)

    def value(self, t):
        t = np.asarray(t, dtype=float)
        return np.asarray(self._spline(t), dtype=float)

    def derivatives(self, t=None):
        """Finite-difference derivatives on the native grid (``t`` must be it or None)."""
        if t is not None and not np.array_equal(np.asarray(t, dtype=float), self.ts):
            raise DomainError("sampled derivatives are only available on the native grid")
        d1, d2 = _grid_derivatives(self.ts, self.values)
        return self.values, d1, d2

    def integral(self, a, xs):
        anti = self._spline.antiderivative()
        return anti(np.atleast_1d(xs)) - anti(a)

    def endpoint_probes(self):
        return self.ts[:3][::-1].copy(), self.ts[-3:].copy()

    def interior_grid(self):
        return self.ts


# --------------------------------------------------------------------------
# validation


@dataclass
class ValidationReport:
    """Outcome of the spectrum-like checks.

    ``limit_bands`` is a stabilization heuristic on finite probes, not a
    proof that the endpoint limits exist.
    """

    differentiable: bool
    positivity: bool
    positivity_witness: Optional[float]
    divergence_at_0: bool
    divergence_at_1: bool
    ratio_sup: float
    ratio_ok: bool
    limit_bands: dict

    @property
    def passed(self) -> bool:
        return (
            self.differentiable
            and self.positivity
            and self.divergence_at_0
            and self.divergence_at_1
            and self.ratio_ok
            and self.limit_bands.get("g0_ok", False)
            and self.limit_bands.get("g1_ok", False)
        )

    def failures(self) -> list[str]:
        out = []
        if not self.differentiable:
            out.append("(1) second derivative not finite")
        if not self.positivity:
            out.append(f"(2) not positive (witness t={self.positivity_witness})")
        if not (self.divergence_at_0 and self.divergence_at_1):
            out.append("(3) no divergence at an endpoint")
        if not self.ratio_ok:
            out.append(f"(3) |f'/f^2| unbounded (sup {self.ratio_sup:.3g})")
        if not (self.limit_bands.get("g0_ok") and self.limit_bands.get("g1_ok")):
            out.append("(4) endpoint limits do not stabilize")
        return out

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "differentiable": self.differentiable,
            "positivity": self.positivity,
            "positivity_witness": self.positivity_witness,
            "divergence_at_0": self.divergence_at_0,
            "divergence_at_1": self.divergence_at_1,
            "ratio_sup": self.ratio_sup,
            "ratio_ok": self.ratio_ok,
            "limit_bands": self.limit_bands,
            "failures": self.failures(),
        }


def _diverges(ts: np.ndarray, fs: np.ndarray, dist: np.ndarray, min_slope: float) -> bool:
    # ts ordered from far to near the endpoint; dist = distance to the endpoint
    if not np.all(np.isfinite(fs)) or np.any(fs <= 0):
        return False
    if not np.all(np.diff(fs) > 0):
        return False
    slope = np.log(fs[-1] / fs[0]) / np.log(dist[0] / dist[-1])
    return bool(slope >= min_slope)


def _band_ok(g: np.ndarray, drift: float) -> bool:
    if not np.all(np.isfinite(g)) or np.any(g <= 0):
        return False
    rel = np.abs(np.diff(g)) / np.abs(g[1:])
    return bool(np.all(rel < drift))


def validate_spectrum_like(
    f: SpectrumLikeFunction,
    anchor: float = 0.5,
    ratio_bound: float = 1e3,
    drift: float = 0.10,
    min_slope: float = 0.5,
) -> ValidationReport:
    """Check the four spectrum-like conditions on probe grids.  Never raises.

    Divergence at an endpoint means f grows monotonically along the probes
    toward it, at least like dist^-min_slope.
    """
    try:
        p0, p1 = f.endpoint_probes()
        grid = np.union1d(f.interior_grid(), np.concatenate([p0, p1]))
        if isinstance(f, SampledSpectrumLike):
            vals, d1, d2 = f.derivatives()
        else:
            vals, d1, d2 = f.derivatives(grid)
        differentiable = bool(np.all(np.isfinite(d1)) and np.all(np.isfinite(d2)))
        bad = np.nonzero(~(vals > 0))[0]
        positivity = bad.size == 0
        witness = float(grid[bad[0]]) if bad.size else None

        f0 = f.value(p0)
        f1 = f.value(p1)
        div0 = _diverges(p0, f0, p0, min_slope)
        div1 = _diverges(p1, f1, 1.0 - p1, min_slope)

        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.abs(d1) / vals**2
        ratio_sup = float(np.max(ratio)) if positivity else float("inf")
        ratio_ok = bool(np.isfinite(ratio_sup) and ratio_sup <= ratio_bound)

        bands: dict = {"heuristic": True, "anchor": anchor, "g0_ok": False, "g1_ok": False}
        if positivity and div0 and div1:
            i0 = f.integral(anchor, p0)  # int_a^t f = -int_t^a f
            i1 = f.integral(anchor, p1)
            g0 = f0 * np.exp(i0)
            g1 = f1 * np.exp(-i1)
            bands.update(
                probes_0=p0.tolist(),
                g0=g0.tolist(),
                g0_ok=_band_ok(g0, drift),
                probes_1=p1.tolist(),
                g1=g1.tolist(),
                g1_ok=_band_ok(g1, drift),
            )
        return ValidationReport(differentiable, positivity, witness, div0, div1, ratio_sup, ratio_ok, bands)
    except Exception as exc:  # reports, never throws
        return ValidationReport(False, False, None, False, False, float("inf"), False, {"error": str(exc)})


# --------------------------------------------------------------------------
# recovery


def recover_q_values(f: SpectrumLikeFunction, grid=None) -> tuple[np.ndarray, np.ndarray]:
    """(x, Q(x)) with Q = -f''/(2f) + 3/4 (f'/f)^2 + f^2/4.

    Sampled inputs are differentiated on their native grid; a different
    ``grid`` is then served by linear interpolation inside the native range.
    """
    if isinstance(f, SampledSpectrumLike):
        x = f.ts
        vals, d1, d2 = f.derivatives()
    else:
        if grid is None:
            raise DomainError("a grid is required for closed-form spectrum-like functions")
        x = np.asarray(grid, dtype=float)
        if np.any((x <= 0) | (x >= 1)):
            raise DomainError("recovery grid must lie in (0, 1)")
        vals, d1, d2 = f.derivatives(x)
    if np.any(~(vals > 0)):
        bad = x[np.nonzero(~(vals > 0))[0][0]]
        raise DomainError(f"spectrum-like function must be positive; f({bad!r}) <= 0")
    Q = -0.5 * d2 / vals + 0.75 * (d1 / vals) ** 2 + 0.25 * vals**2
    if isinstance(f, SampledSpectrumLike) and grid is not None:
        g = np.asarray(grid, dtype=float)
        if g.min() < x[0] or g.max() > x[-1]:
            raise DomainError("grid extends beyond the sampled range")
        return g, np.interp(g, x, Q)
    return x, Q


def recover_potential(f: SpectrumLikeFunction, grid=None, force: bool = False) -> Sampled:
    """Recovered potential as a ``Sampled`` potential on [0, 1].

    Values at 0 and 1 repeat the nearest recovered sample (the formula is
    not defined at the endpoints).  Raises ``ValidationError`` unless ``f``
    passes :func:`validate_spectrum_like` or ``force`` is set.
    """
    if not force:
        report = validate_spectrum_like(f)
        if not report.passed:
            raise ValidationError("not a spectrum-like function: " + "; ".join(report.failures()))
    x, Q = recover_q_values(f, grid)
    if not np.all(np.isfinite(Q)):
        raise NumericalFailure("recovered potential is not finite")
    xs = np.concatenate([[0.0], x, [1.0]])
    qs = np.concatenate([[Q[0]], Q, [Q[-1]]])
    return Sampled(xs, qs)


@dataclass
class ReconstructedBasis:
    x: np.ndarray
    phi: np.ndarray
    dphi: np.ndarray
    psi: np.ndarray
    dpsi: np.ndarray
    omega: float

    def forward(self) -> np.ndarray:
        """-omega / (phi psi); reproduces f."""
        return -self.omega / (self.phi * self.psi)


def _profiles(f: SpectrumLikeFunction, a: float, x: np.ndarray):
    vals, d1, _ = f.derivatives(x) if not isinstance(f, SampledSpectrumLike) else f.derivatives()
    I = f.integral(a, x)
    root = np.sqrt(vals)
    up = np.exp(0.5 * I)
    down = np.exp(-0.5 * I)
    phi = up / root
    psi = down / root
    dphi = (-0.5 * d1 / vals**1.5 + 0.5 * root) * up
    dpsi = (-0.5 * d1 / vals**1.5 - 0.5 * root) * down
    return phi, dphi, psi, dpsi


def reconstruct_basis(f: SpectrumLikeFunction, a: float = 0.5, grid=None, check_anchor: bool = True) -> ReconstructedBasis:
    """phi ~ f^-1/2 exp(+1/2 int_a^x f), psi ~ f^-1/2 exp(-1/2 int_a^x f).

    Normalization constants are 1.  As a self-check the profile is rebuilt
    with a second anchor and must differ only by a constant factor.
    """
    if not (0.0 < a < 1.0):
        raise DomainError("anchor must lie in (0, 1)")
    if isinstance(f, SampledSpectrumLike):
        x = f.ts
    else:
        x = np.asarray(grid if grid is not None else np.linspace(0.05, 0.95, 91), dtype=float)
    if np.any(~(f.value(x) > 0)):
        raise DomainError("spectrum-like function must be positive")
    phi, dphi, psi, dpsi = _profiles(f, a, x)
    if check_anchor:
        a2 = 0.5 * (a + (0.25 if a > 0.5 else 0.75))
        phi2, _, _, _ = _profiles(f, a2, x)
        ratio = phi / phi2
        spread = float(np.max(np.abs(ratio / ratio[0] - 1.0)))
        if spread > 1e-8:
            raise NumericalFailure(f"anchor self-check failed: relative spread {spread:.2e}")
    omega = float(np.mean(phi * dpsi - dphi * psi))
    return ReconstructedBasis(x, phi, dphi, psi, dpsi, omega)
