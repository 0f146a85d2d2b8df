"""Dense real polynomials with ascending coefficients."""
from __future__ import annotations

from typing import Iterable, Optional

import numpy as np
from numpy.polynomial import polynomial as P

__all__ = ["RealPolynomial"]


class RealPolynomial:
    """Polynomial ``sum(coeffs[j] * lam**j)``.

    ``scale`` optionally carries, per coefficient, the magnitude of the
    terms that were summed to produce it.  A coefficient is numerically
    zero when it is small compared with its own scale, which is how
    degree reduction is decided (see :meth:`reduced`).
    """

    __slots__ = ("coeffs", "scale", "reduced_flag")

    def __init__(self, coeffs: Iterable[float], scale: Optional[Iterable[float]] = None, reduced: bool = False):
        c = np.atleast_1d(np.asarray(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs, dtype=float))
        if c.size == 0:
            c = np.zeros(1)
        self.coeffs = c
        if scale is None:
            self.scale = np.abs(c)
        else:
            s = np.atleast_1d(np.asarray(list(scale) if not isinstance(scale, np.ndarray) else scale, dtype=float))
            if s.size < c.size:
                s = np.concatenate([s, np.zeros(c.size - s.size)])
            self.scale = s[: c.size]
        self.reduced_flag = reduced

    # -- construction helpers -------------------------------------------
    @classmethod
    def constant(cls, value: float) -> "RealPolynomial":
        return cls([value])

    @classmethod
    def linear(cls, c0: float, c1: float) -> "RealPolynomial":
        return cls([c0, c1])

    # -- algebra -------------------------------------------------------
    def _pad(self, other: "RealPolynomial"):
        n = max(self.coeffs.size, other.coeffs.size)
        a = np.zeros(n)
        b = np.zeros(n)
        sa = np.zeros(n)
        sb = np.zeros(n)
        a[: self.coeffs.size] = self.coeffs
        b[: other.coeffs.size] = other.coeffs
        sa[: self.scale.size] = self.scale
        sb[: other.scale.size] = other.scale
        return a, b, sa, sb

    def __add__(self, other):
        if not isinstance(other, RealPolynomial):
            other = RealPolynomial([float(other)])
        a, b, sa, sb = self._pad(other)
        return RealPolynomial(a + b, sa + sb)

    __radd__ = __add__

    def __neg__(self):
        return RealPolynomial(-self.coeffs, self.scale)

    def __sub__(self, other):
        return self + (-other if isinstance(other, RealPolynomial) else -float(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RealPolynomial):
            return RealPolynomial(P.polymul(self.coeffs, other.coeffs), P.polymul(self.scale, other.scale))
        k = float(other)
        return RealPolynomial(self.coeffs * k, self.scale * abs(k))

    __rmul__ = __mul__

    def __truediv__(self, k: float):
        return self * (1.0 / float(k))

    def __call__(self, lam):
        return P.polyval(lam, self.coeffs)

    def __repr__(self):
        return f"RealPolynomial({self.coeffs.tolist()})"

    # -- structure -----------------------------------------------------
    @property
    def degree(self) -> int:
        nz = np.nonzero(self.coeffs)[0]
        return int(nz[-1]) if nz.size else -1

    def is_zero_poly(self) -> bool:
        return self.degree < 0

    def derivative(self) -> "RealPolynomial":
        if self.coeffs.size == 1:
            return RealPolynomial([0.0])
        return RealPolynomial(P.polyder(self.coeffs))

    def negligible(self, tau: float) -> np.ndarray:
        """Mask of coefficients that are zero to within ``tau`` of their scale."""
        return np.abs(self.coeffs) <= tau * self.scale

    def is_negligible(self, tau: float) -> bool:
        """True when every coefficient is numerically zero."""
        return bool(np.all(self.negligible(tau)))

    def reduced(self, tau: float, max_degree: Optional[int] = None) -> "RealPolynomial":
        """Drop numerically-zero leading coefficients.

        ``max_degree`` forces every coefficient above it to zero first (used
        when theory guarantees the degree drops).
        """
        c = self.coeffs.copy()
        s = self.scale.copy()
        flagged = False
        if max_degree is not None and c.size > max_degree + 1:
            flagged = flagged or bool(np.any(c[max_degree + 1 :] != 0))
            c = c[: max_degree + 1]
            s = s[: max_degree + 1]
        while c.size > 1 and abs(c[-1]) <= tau * s[-1]:
            flagged = True
            c = c[:-1]
            s = s[:-1]
        return RealPolynomial(c, s, reduced=flagged)

    def eval_scale(self, lam: float) -> float:
        """sum |c_j| |lam|^j, the natural magnitude for residuals at lam."""
        return float(P.polyval(abs(lam), np.abs(self.coeffs)))

    def norm(self) -> float:
        return float(np.sum(np.abs(self.coeffs)))

    def allclose(self, other: "RealPolynomial", rtol: float = 1e-8, atol: float = 0.0) -> bool:
        a, b, _, _ = self._pad(other)
        return bool(np.allclose(a, b, rtol=rtol, atol=atol))
