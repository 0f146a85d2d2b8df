import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diracsl import Constant, DiracWeight, PiecewiseConstant, ProblemFile, Sampled, Zero, emit_csv, parse_problem
from diracsl.errors import ValidationError
from diracsl.serialization import dumps_json, emit_problem, format_float, read_csv


def test_parse_example():
    pb = parse_problem(
        '{"potential":{"type":"constant","value":-22.2066}, "weight":{"nodes":[0.3333,0.6667],"masses":[1,1]}}'
    )
    assert pb.potential == Constant(-22.2066)
    assert pb.weight == DiracWeight([0.3333, 0.6667], [1, 1])
    assert pb.tolerances.zero_det == 1e-9


@pytest.mark.parametrize(
    "text, message",
    [
        ('{"potential":{"type":"zero"},"weight":{"nodes":[0.5,0.25],"masses":[1,1]}}', "nodes must be strictly increasing"),
        ('{"potential":{"type":"zero"},"weight":{"nodes":[0.5],"masses":[0]}}', "masses must be positive"),
        ('{"potential":{"type":"zero"},"weight":{"nodes":[1.5],"masses":[1]}}', "nodes"),
        ('{"potential":{"type":"zero"},"weight":{"nodes":[],"masses":[]},"extra":1}', "unknown key"),
        ('{"potential":{"type":"zero"},"weight":{"nodes":[],"masses":[]},"tolerances":{"imag":0.1}}', "unknown key"),
        ('{"potential":{"type":"zero"},"weight":{"nodes":[],"masses":[]},"tolerances":{"root":2}}', "tolerances.root"),
        ('{"potential":{"type":"zero"}', "malformed JSON"),
        ('{"weight":{"nodes":[],"masses":[]}}', "missing key"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(ValidationError, match=message):
        parse_problem(text)


def test_tolerance_overrides_apply():
    pb = parse_problem('{"potential":{"type":"zero"},"weight":{"nodes":[],"masses":[]},"tolerances":{"zero_det":1e-6}}')
    assert pb.tolerances.zero_det == 1e-6


potentials = st.one_of(
    st.just(Zero()),
    st.floats(-100, 100).map(Constant),
    st.lists(st.floats(-50, 50), min_size=1, max_size=4).map(
        lambda v: PiecewiseConstant(np.linspace(0, 1, len(v) + 1), v)
    ),
    st.lists(st.floats(-50, 50), min_size=2, max_size=5).map(lambda v: Sampled(np.linspace(0, 1, len(v)), v)),
)


@st.composite
def weights(draw):
    n = draw(st.integers(0, 5))
    nodes = sorted(set(draw(st.lists(st.floats(0.001, 0.999), min_size=n, max_size=n))))
    masses = draw(st.lists(st.floats(0.01, 10), min_size=len(nodes), max_size=len(nodes)))
    return DiracWeight(nodes, masses)


@settings(max_examples=60, deadline=None)
@given(potentials, weights())
def test_emit_parse_identity(q, w):
    pb = ProblemFile(q, w)
    back = parse_problem(emit_problem(pb))
    assert back.potential == q and back.weight == w
    assert emit_problem(back) == emit_problem(pb)


def test_csv_examples():
    assert emit_csv([(0.5, 4.0)], "t,lambda") == "t,lambda\n0.5,4\n"
    assert emit_csv([], "t,lambda") == "t,lambda\n"
    assert emit_csv([(1 / 3, 3.0)], "t,lambda") == "t,lambda\n0.3333333333333333,3\n"


@settings(max_examples=100)
@given(st.floats(allow_nan=False, allow_infinity=False))
def test_float_format_round_trips(x):
    assert float(format_float(x)) == x


def test_csv_read_back():
    text = emit_csv([(0.1, 2.5), (0.2, 1 / 7)], "t,lambda")
    arr = read_csv(text, ("t", "lambda"))
    np.testing.assert_array_equal(arr, [[0.1, 2.5], [0.2, 1 / 7]])
    with pytest.raises(ValidationError):
        read_csv(text, ("x", "q"))
    with pytest.raises(ValidationError):
        read_csv("t,lambda\n0.1,abc\n")


def test_json_is_deterministic_and_sorted():
    a = dumps_json({"b": 1.0, "a": [np.float64(0.1), np.bool_(True)], "c": float("nan")})
    assert a == dumps_json({"c": float("nan"), "a": [0.1, True], "b": 1.0})
    assert list(json.loads(a)) == ["a", "b", "c"]
    assert json.loads(a)["c"] is None
