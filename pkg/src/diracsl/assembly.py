"""Discriminants, transfer matrices, the coefficient chain and the
characteristic polynomial / matrix of a Dirac-weighted Dirichlet problem.

Across node t_i the eigenfunction coefficients in the basis (phi, psi)
obey

    (alpha_i, beta_i) = M_i(lam) (alpha_{i-1}, beta_{i-1}),
    M_i(lam) = I + (lam / omega) m_i N_i,
    N_i = [[phi psi, psi^2], [-phi^2, -phi psi]] evaluated at t_i,

and the characteristic polynomial is p(lam) = alpha_n phi(1) + beta_n psi(1).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DomainError, TridiagonalUnavailable, ValidationError
from .fundamental import FundamentalBasis
from .polynomial import RealPolynomial
from .tolerances import DEFAULT_TOLERANCES, Tolerances

__all__ = [
    "DiracWeight",
    "CoefficientChain",
    "TridiagonalSystem",
    "discriminant",
    "discriminant_scale",
    "is_zero_discriminant",
    "transfer_matrix",
    "coefficient_chain",
    "coefficient_chain_closed_form",
    "characteristic_polynomial",
    "charpoly_matrix_constant",
    "tridiagonal_system",
]


@dataclass(frozen=True, eq=False)
class DiracWeight:
    """Point masses m_i at interior nodes 0 < t_1 < ... < t_n < 1."""

    nodes: np.ndarray
    masses: np.ndarray

    def __init__(self, nodes: Sequence[float] = (), masses: Sequence[float] = ()):
        t = np.asarray(nodes, dtype=float).reshape(-1)
        m = np.asarray(masses, dtype=float).reshape(-1)
        if t.size != m.size:
            raise ValidationError("nodes and masses must have the same length")
        if not (np.all(np.isfinite(t)) and np.all(np.isfinite(m))):
            raise ValidationError("nodes and masses must be finite")
        if np.any((t <= 0.0) | (t >= 1.0)):
            raise ValidationError("nodes must lie in the open interval (0, 1)")
        if np.any(np.diff(t) <= 0):
            raise ValidationError("nodes must be strictly increasing")
        if np.any(m <= 0):
            raise ValidationError("masses must be positive")
        t.setflags(write=False)
        m.setflags(write=False)
        object.__setattr__(self, "nodes", t)
        object.__setattr__(self, "masses", m)

    @property
    def n(self) -> int:
        return int(self.nodes.size)

    def partition(self) -> np.ndarray:
        """Nodes with the sentinels t_0 = 0 and t_{n+1} = 1 attached."""
        return np.concatenate([[0.0], self.nodes, [1.0]])

    def scaled(self, c: float) -> "DiracWeight":
        return DiracWeight(self.nodes, self.masses * c)

    def __eq__(self, other):
        return (
            isinstance(other, DiracWeight)
            and np.array_equal(self.nodes, other.nodes)
            and np.array_equal(self.masses, other.masses)
        )

    def __hash__(self):
        return hash((self.nodes.tobytes(), self.masses.tobytes()))

    def __repr__(self):
        return f"DiracWeight(nodes={self.nodes.tolist()}, masses={self.masses.tolist()})"

    def to_dict(self) -> dict:
        return {"nodes": self.nodes.tolist(), "masses": self.masses.tolist()}


def discriminant(basis: FundamentalBasis, xi: float, eta: float) -> float:
    """D_{eta,xi} = phi(eta) psi(xi) - phi(xi) psi(eta), for 0 <= xi < eta <= 1."""
    if not (0.0 <= xi < eta <= 1.0):
        raise DomainError(f"need 0 <= xi < eta <= 1, got xi={xi!r}, eta={eta!r}")
    pe, pxi = basis.phi.value(eta), basis.phi.value(xi)
    se, sxi = basis.psi.value(eta), basis.psi.value(xi)
    return float(pe * sxi - pxi * se)


def discriminant_scale(basis: FundamentalBasis, xi: float, eta: float) -> float:
    pe, pxi = basis.phi.value(eta), basis.phi.value(xi)
    se, sxi = basis.psi.value(eta), basis.psi.value(xi)
    return float(abs(pe * sxi) + abs(pxi * se) + 1.0)


def scaled_discriminant(basis: FundamentalBasis, xi: float, eta: float) -> float:
    """|D_{eta,xi}| relative to the size of the products it is built from."""
    return abs(discriminant(basis, xi, eta)) / discriminant_scale(basis, xi, eta)


def is_zero_discriminant(basis: FundamentalBasis, xi: float, eta: float, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    return scaled_discriminant(basis, xi, eta) <= tol.zero_det


def _n_matrix(basis: FundamentalBasis, t: float):
    p = basis.phi.value(t)
    s = basis.psi.value(t)
    return np.array([[p * s, s * s], [-p * p, -p * s]])


def _n_scale(basis: FundamentalBasis) -> np.ndarray:
    # Magnitude stand-in for N_i: floating-point errors in phi(t), psi(t) are
    # relative to sup|phi|, sup|psi|, not to the possibly-vanishing values.
    a, b = basis.phi_sup, basis.psi_sup
    return np.array([[a * b, b * b], [a * a, a * b]])


def transfer_matrix(basis: FundamentalBasis, t: float, m: float) -> list[list[RealPolynomial]]:
    """M(lam) = I + (lam/omega) m N(t), entries of degree <= 1 in lam."""
    if not (0.0 < t < 1.0):
        raise DomainError("transfer matrix node must be interior")
    if m <= 0:
        raise DomainError("mass must be positive")
    N = _n_matrix(basis, t)
    S = _n_scale(basis)
    k = m / basis.omega
    ks = m / abs(basis.omega)
    eye = np.eye(2)
    return [
        [RealPolynomial([eye[i, j], k * N[i, j]], [eye[i, j], ks * S[i, j]]) for j in range(2)]
        for i in range(2)
    ]


def _apply(M, vec):
    a, b = vec
    return (M[0][0] * a + M[0][1] * b, M[1][0] * a + M[1][1] * b)


@dataclass(frozen=True)
class CoefficientChain:
    """(alpha_i(lam), beta_i(lam)) for i = 0..n, starting from (1, 0)."""

    alphas: list = field(default_factory=list)
    betas: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.alphas) - 1

    def at(self, lam: float) -> np.ndarray:
        """Numeric (alpha_i, beta_i) pairs at a given lam, shape (n+1, 2)."""
        return np.array([[a(lam), b(lam)] for a, b in zip(self.alphas, self.betas)])


def coefficient_chain(basis: FundamentalBasis, w: DiracWeight) -> CoefficientChain:
    """Left-multiply the transfer matrices onto (1, 0)."""
    vec = (RealPolynomial([1.0]), RealPolynomial([0.0], [0.0]))
    alphas, betas = [vec[0]], [vec[1]]
    for t, m in zip(w.nodes, w.masses):
        vec = _apply(transfer_matrix(basis, float(t), float(m)), vec)
        alphas.append(vec[0])
        betas.append(vec[1])
    return CoefficientChain(alphas, betas)


def coefficient_chain_closed_form(basis: FundamentalBasis, w: DiracWeight) -> CoefficientChain:
    """Expanded subset sums for alpha_K, beta_K (test path; exponential in n).

    The coefficient of lam^l sums over index sets i_1 < ... < i_l <= K of
        omega^-l  prod m_{i_k}  prod_{k>=2} D_{t_{i_k}, t_{i_{k-1}}} * v
    with v = psi(t_{i_l}) phi(t_{i_1}) for alpha and -phi(t_{i_l}) phi(t_{i_1})
    for beta.  The l = 1 and l = K terms are the single-index and full-set
    cases; for K <= 2 there is no middle term.
    """
    t = w.nodes
    phi = basis.phi.value(t) if t.size else np.array([])
    psi = basis.psi.value(t) if t.size else np.array([])
    D = np.zeros((t.size, t.size))
    for i in range(t.size):
        for j in range(i):
            D[i, j] = discriminant(basis, float(t[j]), float(t[i]))
    alphas = [RealPolynomial([1.0])]
    betas = [RealPolynomial([0.0])]
    for K in range(1, t.size + 1):
        ca = np.zeros(K + 1)
        cb = np.zeros(K + 1)
        ca[0] = 1.0
        for l in range(1, K + 1):
            for idx in itertools.combinations(range(K), l):
                term = np.prod(w.masses[list(idx)]) / basis.omega**l
                for a, b in zip(idx[1:], idx[:-1]):
                    term *= D[a, b]
                ca[l] += term * psi[idx[-1]] * phi[idx[0]]
                cb[l] -= term * phi[idx[-1]] * phi[idx[0]]
        alphas.append(RealPolynomial(ca))
        betas.append(RealPolynomial(cb))
    return CoefficientChain(alphas, betas)


def characteristic_polynomial(basis: FundamentalBasis, w: DiracWeight, chain: CoefficientChain | None = None) -> RealPolynomial:
    """p(lam) = alpha_n phi(1) + beta_n psi(1).

    Case I: psi(1) = 0 so p = phi(1) alpha_n.  Case II: phi(1) = 0 and
    psi(1) = 1 so p = beta_n.  The result is not degree-reduced.
    """
    if chain is None:
        chain = coefficient_chain(basis, w)
    if basis.is_case_one:
        return chain.alphas[-1] * basis.phi_end
    return chain.betas[-1] * basis.psi_end


def charpoly_matrix_constant(basis: FundamentalBasis, w: DiracWeight) -> float:
    """c in p(lam) = c det(X - lam I):  (-1)^{n+1} omega^{-(n+1)} prod m prod D_{t_k,t_{k-1}}."""
    ts = w.partition()
    prod_d = 1.0
    for k in range(1, ts.size):
        prod_d *= discriminant(basis, float(ts[k - 1]), float(ts[k]))
    n = w.n
    return (-1.0) ** (n + 1) / basis.omega ** (n + 1) * float(np.prod(w.masses)) * prod_d


@dataclass(frozen=True)
class TridiagonalSystem:
    """A_n (or B_n), the mass matrix and the symmetric characteristic matrix X.

    ``sym_diag`` / ``sym_offdiag`` hold X = M^{-1/2} (-omega A) M^{-1/2}.
    """

    diag: np.ndarray
    offdiag: np.ndarray
    mass_diag: np.ndarray
    sym_diag: np.ndarray
    sym_offdiag: np.ndarray
    omega: float
    boundary_product: float
    min_margin: float

    @property
    def n(self) -> int:
        return int(self.diag.size)

    def matrix(self) -> np.ndarray:
        X = np.diag(self.sym_diag)
        if self.n > 1:
            X += np.diag(self.sym_offdiag, 1) + np.diag(self.sym_offdiag, -1)
        return X

    def charpoly(self) -> RealPolynomial:
        """det(X - lam I) by the three-term recurrence."""
        prev2 = RealPolynomial([1.0])
        prev = RealPolynomial([self.sym_diag[0], -1.0])
        for k in range(1, self.n):
            cur = RealPolynomial([self.sym_diag[k], -1.0]) * prev - prev2 * (self.sym_offdiag[k - 1] ** 2)
            prev2, prev = prev, cur
        return prev


def tridiagonal_system(basis: FundamentalBasis, w: DiracWeight, tol: Tolerances = DEFAULT_TOLERANCES) -> TridiagonalSystem:
    """Build A_n / B_n and X; requires hypothesis (H) and n >= 1."""
    n = w.n
    if n < 1:
        raise DomainError("tridiagonal system needs at least one node")
    ts = w.partition()
    consecutive = np.array([discriminant(basis, float(ts[k]), float(ts[k + 1])) for k in range(n + 1)])
    margins = np.array([scaled_discriminant(basis, float(ts[k]), float(ts[k + 1])) for k in range(n + 1)])
    if np.any(margins <= tol.zero_det):
        k = int(np.argmin(margins))
        raise TridiagonalUnavailable(
            f"hypothesis (H) fails: D(t_{k + 1}, t_{k}) ~ 0 (scaled margin {margins[k]:.3e}); "
            "use the characteristic-polynomial route"
        )
    skip = np.array([discriminant(basis, float(ts[k - 1]), float(ts[k + 1])) for k in range(1, n + 1)])
    diag = skip / (consecutive[1:] * consecutive[:-1])
    offdiag = -1.0 / consecutive[1:-1]
    m = w.masses
    sym_diag = -basis.omega * diag / m
    sym_off = -basis.omega * offdiag / np.sqrt(m[:-1] * m[1:])
    return TridiagonalSystem(
        diag=diag,
        offdiag=offdiag,
        mass_diag=m.copy(),
        sym_diag=sym_diag,
        sym_offdiag=sym_off,
        omega=basis.omega,
        boundary_product=float(np.prod(consecutive)),
        min_margin=float(margins.min()),
    )
