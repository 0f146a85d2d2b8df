import numpy as np
import pytest

import _properties as P


@pytest.fixture(scope="module")
def rows():
    return P.classified(P.suite())


def test_suite_is_large_and_mixed(rows):
    assert len(rows) >= 50
    assert any(not r.h0 for _, _, r, _ in rows)
    assert any(not r.h for _, _, r, _ in rows)
    assert any(not s.is_finite for _, _, _, s in rows)


def test_discriminant_identity():
    assert P.discriminant_identity(P.suite(), np.random.default_rng(1)) == []


def test_transfer_matrices_unimodular():
    assert P.unimodular_transfer(P.suite()) == []


def test_wronskian_constancy():
    assert P.wronskian_constancy(P.suite(), np.random.default_rng(2)) == []


def test_mass_scaling_covariance(rows):
    assert P.mass_scaling(rows, np.random.default_rng(3)) == []


def test_count_bound(rows):
    assert P.count_bound(rows) == []


def test_zero_eigenvalue_iff_h0_fails(rows):
    assert P.zero_iff_not_h0(rows) == []


def test_oracle_agreement(rows):
    bad, excluded, total = P.oracle_agreement(rows)
    assert bad == []
    assert excluded / total < 0.10


def test_companion_roots_real_when_finite(rows):
    bad, _ = P.companion_imaginary_parts(rows)
    assert bad == []
