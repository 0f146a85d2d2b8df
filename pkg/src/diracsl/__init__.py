"""Dirichlet spectra of -y'' + q y = lam (sum m_i delta(x - t_i)) y on [0, 1],
and recovery of q from single-Dirac eigenvalue curves."""

from .assembly import (
    DiracWeight,
    characteristic_polynomial,
    coefficient_chain,
    discriminant,
    transfer_matrix,
    tridiagonal_system,
)
from .classifier import (
    HypothesisReport,
    Spectrum,
    SpectrumKind,
    check_hypotheses,
    classify_spectrum,
    eigenfunction,
)
from .errors import (
    DiracSLError,
    DomainError,
    EmptySpectrum,
    InconsistencyError,
    NumericalFailure,
    SpectralRegimeError,
    TridiagonalUnavailable,
    ValidationError,
    ZeroEigenvalueRegime,
)
from .fundamental import CaseTag, FundamentalBasis, build_basis, propagate_state
from .inverse import (
    ClosedSpectrumLike,
    SampledSpectrumLike,
    forward_lambda,
    forward_map,
    reconstruct_basis,
    recover_potential,
    spectral_curve,
    validate_spectrum_like,
)
from .polynomial import RealPolynomial
from .potential import Constant, PiecewiseConstant, Potential, Sampled, Zero
from .serialization import ProblemFile, emit_csv, load_problem, parse_problem
from .shooting import miss, scan_spectrum
from .tolerances import DEFAULT_TOLERANCES, Tolerances
from .tridiag import SymTridiag, sturm_count
from .tridiag import eigenvalues as tridiag_eigenvalues

__version__ = "0.1.0"

__all__ = [
    "CaseTag",
    "ClosedSpectrumLike",
    "Constant",
    "DEFAULT_TOLERANCES",
    "DiracSLError",
    "DiracWeight",
    "DomainError",
    "EmptySpectrum",
    "FundamentalBasis",
    "HypothesisReport",
    "InconsistencyError",
    "NumericalFailure",
    "PiecewiseConstant",
    "Potential",
    "ProblemFile",
    "RealPolynomial",
    "Sampled",
    "SampledSpectrumLike",
    "SpectralRegimeError",
    "Spectrum",
    "SpectrumKind",
    "SymTridiag",
    "Tolerances",
    "TridiagonalUnavailable",
    "ValidationError",
    "Zero",
    "ZeroEigenvalueRegime",
    "build_basis",
    "characteristic_polynomial",
    "check_hypotheses",
    "classify_spectrum",
    "coefficient_chain",
    "discriminant",
    "eigenfunction",
    "emit_csv",
    "forward_lambda",
    "forward_map",
    "load_problem",
    "miss",
    "parse_problem",
    "propagate_state",
    "reconstruct_basis",
    "recover_potential",
    "scan_spectrum",
    "spectral_curve",
    "sturm_count",
    "transfer_matrix",
    "tridiag_eigenvalues",
    "tridiagonal_system",
    "validate_spectrum_like",
]
