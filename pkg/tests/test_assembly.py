import math

import numpy as np
import pytest

from _problems import GOLDEN, random_suite
from diracsl import DiracWeight, Zero, build_basis, characteristic_polynomial, coefficient_chain, discriminant
from diracsl import transfer_matrix, tridiagonal_system
from diracsl.assembly import charpoly_matrix_constant, coefficient_chain_closed_form
from diracsl.errors import DomainError, TridiagonalUnavailable, ValidationError
from diracsl import Constant

PI = math.pi


def basis_of(name):
    q, w = GOLDEN[name]
    return build_basis(q), w


def test_weight_validation_messages():
    with pytest.raises(ValidationError, match="nodes must be strictly increasing"):
        DiracWeight([0.5, 0.25], [1, 1])
    with pytest.raises(ValidationError, match="masses must be positive"):
        DiracWeight([0.5], [0])
    with pytest.raises(ValidationError, match="open interval"):
        DiracWeight([1.0], [1])


def test_discriminant_examples():
    bz = build_basis(Zero())
    assert discriminant(bz, 0.25, 0.75) == pytest.approx(0.5)
    b = build_basis(Constant(-9 * PI**2 / 4))
    assert discriminant(b, 0.0, 1.0) == pytest.approx(4 / (9 * PI**2), abs=1e-12)
    assert discriminant(b, 1 / 3, 1.0) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(DomainError):
        discriminant(b, 0.6, 0.4)


def test_transfer_matrix_zero_potential():
    M = transfer_matrix(build_basis(Zero()), 0.5, 1.0)
    expected = [[[1, -0.25], [0, -0.25]], [[0, 0.25], [1, 0.25]]]
    for i in range(2):
        for j in range(2):
            np.testing.assert_allclose(np.pad(M[i][j].coeffs, (0, 2))[:2], expected[i][j], atol=1e-15)


def test_transfer_matrix_determinant_is_one():
    for inst in random_suite(10, seed=5):
        b = build_basis(inst.q)
        for t, m in zip(inst.w.nodes, inst.w.masses):
            M = transfer_matrix(b, float(t), float(m))
            det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
            c = np.pad(det.coeffs, (0, 3))
            assert c[0] == pytest.approx(1.0, abs=1e-10)
            assert np.all(np.abs(c[1:]) <= 1e-10 * np.maximum(1.0, det.scale.max()))


def test_chain_empty_weight():
    ch = coefficient_chain(build_basis(Zero()), DiracWeight())
    assert ch.n == 0
    np.testing.assert_allclose(ch.at(2.0), [[1.0, 0.0]])


def test_chain_single_node_zero_potential():
    ch = coefficient_chain(build_basis(Zero()), DiracWeight([0.5], [1.0]))
    assert ch.alphas[1](8.0) == pytest.approx(1 - 8 / 4)
    assert ch.betas[1](8.0) == pytest.approx(8 / 4)


def test_chain_matches_closed_form():
    for inst in random_suite(15, seed=9):
        if inst.w.n > 5:
            continue
        b = build_basis(inst.q)
        a, c = coefficient_chain(b, inst.w), coefficient_chain_closed_form(b, inst.w)
        for lam in (-3.0, 0.7, 11.0):
            x, y = a.at(lam), c.at(lam)
            assert np.allclose(x, y, rtol=1e-8, atol=1e-8 * np.max(np.abs(x)))


@pytest.mark.parametrize(
    "name, coeffs",
    [
        ("e1", [-2 / (3 * PI), 0.0, 2 / (3 * PI) * 4 / (9 * PI**2)]),
        ("e2", [-2 / (3 * PI), 2 / (3 * PI) / (3 * math.sqrt(2) * PI)]),
        ("e4", [0.0, -1 / PI**2]),
    ],
)
def test_characteristic_polynomial_examples(name, coeffs):
    b, w = basis_of(name)
    p = characteristic_polynomial(b, w)
    got = np.pad(p.coeffs, (0, 3))[: len(coeffs)]
    np.testing.assert_allclose(got, coeffs, atol=1e-10)
    assert np.all(np.abs(p.coeffs[len(coeffs):]) < 1e-10)


def test_characteristic_polynomial_vanishes_for_common_eigenfunction():
    b, w = basis_of("e6")
    assert characteristic_polynomial(b, w).is_negligible(1e-9)


def test_tridiagonal_zero_potential():
    T = tridiagonal_system(*basis_of("zero2"))
    np.testing.assert_allclose(T.matrix(), [[6, -3], [-3, 6]], atol=1e-12)


def test_tridiagonal_case_two():
    T = tridiagonal_system(*basis_of("e5"))
    s = math.sqrt(2) * PI
    np.testing.assert_allclose(T.matrix(), [[2 * PI, -s], [-s, PI]], atol=1e-12)


def test_tridiagonal_single_node_reproduces_forward_map():
    b = build_basis(Constant(3.0))
    T = tridiagonal_system(b, DiracWeight([0.3], [1.0]))
    lam = -b.omega / (b.phi.value(0.3) * b.psi.value(0.3))
    assert T.matrix()[0, 0] == pytest.approx(lam, rel=1e-12)


def test_tridiagonal_unavailable_when_h_fails():
    with pytest.raises(TridiagonalUnavailable):
        tridiagonal_system(*basis_of("e2"))


def test_matrix_and_polynomial_are_proportional():
    for inst in random_suite(30, seed=17):
        b = build_basis(inst.q)
        try:
            T = tridiagonal_system(b, inst.w)
        except TridiagonalUnavailable:
            continue
        p = characteristic_polynomial(b, inst.w)
        lhs = T.charpoly() * charpoly_matrix_constant(b, inst.w)
        n = inst.w.n
        np.testing.assert_allclose(lhs.coeffs[: n + 1], p.coeffs[: n + 1], rtol=1e-8, atol=1e-8 * np.max(np.abs(p.coeffs)))
