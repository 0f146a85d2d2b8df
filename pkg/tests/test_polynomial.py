import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diracsl import RealPolynomial

coef = st.floats(-10, 10, allow_nan=False)


@settings(max_examples=50, deadline=None)
@given(st.lists(coef, min_size=1, max_size=5), st.lists(coef, min_size=1, max_size=5), st.floats(-3, 3))
def test_ring_operations_match_evaluation(a, b, x):
    p, q = RealPolynomial(a), RealPolynomial(b)
    assert (p * q)(x) == pytest.approx(p(x) * q(x), rel=1e-9, abs=1e-9)
    assert (p + q)(x) == pytest.approx(p(x) + q(x), rel=1e-12, abs=1e-12)
    assert (p - q)(x) == pytest.approx(p(x) - q(x), rel=1e-12, abs=1e-12)


def test_degree_and_zero():
    assert RealPolynomial([0.0]).degree == -1
    assert RealPolynomial([1, 2, 0]).degree == 1
    assert RealPolynomial([0, 0]).is_zero_poly


def test_reduction_drops_negligible_leading_terms():
    p = RealPolynomial([1.0, 2.0, 1e-14], scale=[1.0, 1.0, 1.0])
    r = p.reduced(1e-9)
    assert r.degree == 1
    assert r.reduced_flag


def test_derivative():
    np.testing.assert_allclose(RealPolynomial([1, 2, 3]).derivative().coeffs, [2, 6])
