import math

import numpy as np
import pytest

from diracsl import Constant, PiecewiseConstant, Sampled, Zero
from diracsl.errors import DomainError, ValidationError
from diracsl.potential import breakpoints, evaluate, l1_norm, potential_from_dict


def test_evaluate_examples():
    assert evaluate(Zero(), 0.37) == 0.0
    assert evaluate(Constant(-math.pi**2), 0.5) == pytest.approx(-9.8696044, abs=1e-7)
    assert evaluate(PiecewiseConstant([0, 0.5, 1], [-1, 2]), 0.5) == 2.0


def test_piecewise_right_continuous_and_last_piece_closed():
    q = PiecewiseConstant([0, 0.25, 0.5, 1], [1, 2, 3])
    np.testing.assert_array_equal(q.evaluate([0, 0.2499, 0.25, 0.75, 1.0]), [1, 1, 2, 3, 3])


def test_sampled_is_piecewise_linear():
    q = Sampled([0, 0.5, 1], [0, 1, 0])
    assert q.evaluate(0.25) == pytest.approx(0.5)
    assert q.evaluate(0.75) == pytest.approx(0.5)


@pytest.mark.parametrize("x", [-0.1, 1.0001, float("nan")])
def test_out_of_domain(x):
    with pytest.raises(DomainError):
        Zero().evaluate(x)


def test_l1_norm_examples():
    assert l1_norm(Zero()) == 0
    assert l1_norm(Constant(-9 * math.pi**2 / 4)) == pytest.approx(22.2066099, abs=1e-7)
    assert l1_norm(PiecewiseConstant([0, 0.5, 1], [-1, 2])) == pytest.approx(1.5)
    # trapezoid of |q| for sampled data
    assert l1_norm(Sampled([0, 0.5, 1], [-1, 1, -1])) == pytest.approx(1.0)


def test_breakpoints_examples():
    np.testing.assert_array_equal(breakpoints(Zero()), [0, 1])
    np.testing.assert_array_equal(breakpoints(PiecewiseConstant([0, 0.5, 1], [1, 2])), [0, 0.5, 1])
    np.testing.assert_array_equal(breakpoints(Sampled([0, 0.25, 1], [1, 2, 3])), [0, 0.25, 1])


@pytest.mark.parametrize(
    "args",
    [
        ([0, 0.5], [1]),  # does not reach 1
        ([0, 0.6, 0.5, 1], [1, 2, 3]),  # not increasing
        ([0, 1], [1, 2]),  # length mismatch
        ([0, 1], [float("inf")]),
    ],
)
def test_piecewise_validation(args):
    with pytest.raises(ValidationError):
        PiecewiseConstant(*args)


def test_dict_round_trip():
    for q in (Zero(), Constant(2.5), PiecewiseConstant([0, 0.3, 1], [1, -4]), Sampled([0, 0.2, 1], [0, 3, 1])):
        assert potential_from_dict(q.to_dict()) == q


@pytest.mark.parametrize(
    "obj",
    [
        {"type": "constant"},
        {"type": "constant", "value": 1, "extra": 2},
        {"type": "spline"},
        [],
    ],
)
def test_dict_rejects(obj):
    with pytest.raises(ValidationError):
        potential_from_dict(obj)
