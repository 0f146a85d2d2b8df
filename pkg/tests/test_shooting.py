import math

import numpy as np
import pytest

from _problems import GOLDEN, random_suite
from diracsl import build_basis, characteristic_polynomial, miss, scan_spectrum
from diracsl.shooting import MissFunction


def test_single_node_zero_potential():
    q, w = GOLDEN["zero1"]
    lam = np.array([0.0, 4.0, -2.0, 7.5])
    np.testing.assert_allclose(miss(q, w, lam), 1 - lam / 4, atol=1e-15)


def test_two_nodes_zero_potential():
    q, w = GOLDEN["zero2"]
    lam = np.linspace(-5, 15, 9)
    np.testing.assert_allclose(miss(q, w, lam), 1 - 4 * lam / 9 + lam**2 / 27, atol=1e-13)


def test_golden_root():
    q, w = GOLDEN["e1"]
    assert abs(miss(q, w, 3 * math.pi / 2)) < 1e-8


@pytest.mark.parametrize(
    "name, lo, hi, samples, expected",
    [
        ("zero2", 0, 20, 200, [3, 9]),
        ("e5", -5, 15, 2001, [0, 3 * math.pi]),
        ("e3", -100, 100, 2001, []),
    ],
)
def test_scan_examples(name, lo, hi, samples, expected):
    q, w = GOLDEN[name]
    got = scan_spectrum(q, w, lo, hi, samples)
    assert got == pytest.approx(expected, abs=1e-9)


def test_miss_is_proportional_to_characteristic_polynomial():
    lam = np.linspace(-20, 20, 20)
    for inst in random_suite(15, seed=23):
        f = MissFunction(inst.q, inst.w)
        p = characteristic_polynomial(build_basis(inst.q), inst.w)
        if p.is_negligible(1e-9):
            # common eigenfunction: both sides are rounding noise
            assert np.max(np.abs(f(lam))) < 1e-12
            continue
        m, pv = f(lam), p(lam)
        c = pv[np.argmax(np.abs(m))] / m[np.argmax(np.abs(m))]
        assert np.allclose(c * m, pv, rtol=1e-8, atol=1e-8 * np.max(np.abs(pv)))


def test_profile_vanishes_at_both_ends_for_eigenvalue():
    q, w = GOLDEN["zero1"]
    x, y = MissFunction(q, w).profile(4.0, samples=11)
    assert y[0] == 0 and abs(y[-1]) < 1e-14
    assert y[x == 0.5][0] == pytest.approx(0.5)
