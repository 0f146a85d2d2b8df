import math

import numpy as np
import pytest

from _problems import GOLDEN
from diracsl import RealPolynomial, SpectrumKind, build_basis, check_hypotheses, classify_spectrum, eigenfunction, miss
from diracsl.classifier import real_polynomial_roots
from diracsl.errors import DomainError, TridiagonalUnavailable

PI = math.pi


def run(name, method="auto"):
    q, w = GOLDEN[name]
    b = build_basis(q)
    return (b, w) + classify_spectrum(b, w, method=method)


@pytest.mark.parametrize(
    "name, h0, h, h1",
    [("e1", True, True, False), ("e3", True, False, False), ("e6", False, False, True), ("e4", False, True, False)],
)
def test_hypotheses(name, h0, h, h1):
    q, w = GOLDEN[name]
    r = check_hypotheses(build_basis(q), w)
    assert (r.h0, r.h, r.h1) == (h0, h, h1)


@pytest.mark.parametrize(
    "name, expected",
    [("e1", [-1.5 * PI, 1.5 * PI]), ("e2", [3 * math.sqrt(2) * PI]), ("e3", []), ("e4", [0.0]), ("e5", [0.0, 3 * PI])],
)
def test_finite_spectra(name, expected):
    *_, spec = run(name)
    assert spec.kind is SpectrumKind.FINITE
    assert list(spec.eigenvalues) == pytest.approx(expected, abs=1e-8)


def test_all_complex():
    *_, rep, spec = run("e6")
    assert spec.kind is SpectrumKind.ALL_COMPLEX and rep.h1


def test_methods_agree_and_tridiag_is_refused_without_h():
    a = run("e5", "charpoly")[-1].eigenvalues
    b = run("e5", "tridiag")[-1].eigenvalues
    assert a == pytest.approx(b, abs=1e-10)
    with pytest.raises(TridiagonalUnavailable):
        run("e2", "tridiag")


def test_reported_eigenvalues_pass_shooting_residual():
    for name in ("e1", "e2", "e4", "e5", "zero2"):
        q, w = GOLDEN[name]
        b, w, _, spec = run(name)
        for lam in spec.eigenvalues:
            f = miss(q, w, lam)
            assert abs(f) <= 1e-6


@pytest.mark.parametrize(
    "coeffs, roots",
    [
        ([1, -0.25], [4.0]),
        ([-2 / (3 * PI), 0, 2 / (3 * PI) * 4 / (9 * PI**2)], [-1.5 * PI, 1.5 * PI]),
        ([-2 / (3 * PI)], []),
        ([1, 0, 1], []),  # complex pair only
    ],
)
def test_real_polynomial_roots(coeffs, roots):
    assert list(real_polynomial_roots(RealPolynomial(coeffs))) == pytest.approx(roots, abs=1e-8)


def test_real_roots_reject_zero_polynomial():
    with pytest.raises(DomainError):
        real_polynomial_roots(RealPolynomial([0.0, 0.0]))


def test_eigenfunction_tent():
    b, w = build_basis(GOLDEN["zero1"][0]), GOLDEN["zero1"][1]
    E = eigenfunction(b, w, 4.0)
    x = np.linspace(0, 1, 21)
    np.testing.assert_allclose(E(x), np.minimum(x, 1 - x), atol=1e-14)
    np.testing.assert_allclose(E.jump_residuals(), 0, atol=1e-14)


def test_eigenfunction_at_zero_is_phi():
    b, w = build_basis(GOLDEN["e4"][0]), GOLDEN["e4"][1]
    x = np.linspace(0, 1, 11)
    np.testing.assert_allclose(eigenfunction(b, w, 0.0)(x), np.sin(PI * x) / PI, atol=1e-14)


def test_common_eigenfunction_in_all_complex_case():
    q, w = GOLDEN["e6"]
    b = build_basis(q)
    x = np.linspace(0, 1, 11)
    for lam in (-3.0, 0.5, 40.0):
        E = eigenfunction(b, w, lam)
        np.testing.assert_allclose(E(x), np.sin(2 * PI * x) / (2 * PI), atol=1e-12)


def test_eigenfunction_rejects_non_eigenvalue():
    q, w = GOLDEN["e1"]
    with pytest.raises(DomainError):
        eigenfunction(build_basis(q), w, 1.0)


def test_eigenfunction_residuals_on_golden():
    q, w = GOLDEN["e1"]
    b = build_basis(q)
    E = eigenfunction(b, w, 1.5 * PI)
    assert np.max(np.abs(E.jump_residuals())) < 1e-12
    assert np.max(np.abs(E.continuity_residuals())) < 1e-12
    assert abs(E(1.0)) < 1e-12
