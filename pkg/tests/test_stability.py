from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qgamma import LaurentScalar
from qgamma.partitions import prepend, straighten
from qgamma.plethysm import pleth
from qgamma.schur_q import q_lambda, to_q_basis
from qgamma.stability import (
    Classification,
    classify_tail,
    extrapolate,
    inner_theorem_bound,
    outer_theorem_bound,
    partial_fraction,
    sequence_inner,
    sequence_outer,
)


# --- tail classification --------------------------------------------------------


def test_classify_examples():
    vals = [0, 960, 8576, 10624, 10624, 10624]
    assert classify_tail(vals, 2) == Classification("constant", 10624, 3)
    assert classify_tail(vals, 3) == Classification("constant", 10624, 3)
    assert classify_tail([1, 1, 1, 1]) == Classification("constant", 1, 0)
    assert classify_tail([0, 96, 704, 2048, 3712, 5376, 7040]) == Classification("arithmetic", 1664, 3)
    assert classify_tail([1, 2, 4, 8, 16]).kind == "undetermined"


def test_classify_errors():
    with pytest.raises(ValueError):
        classify_tail([1, 1, 1], window=1)
    with pytest.raises(ValueError):
        classify_tail([1, 1, 1], window=3)


def test_extrapolate():
    assert extrapolate(Classification("constant", 5, 0), 5, 2) == [5, 5]
    assert extrapolate(Classification("arithmetic", 3, 0), 10, 3) == [13, 16, 19]
    with pytest.raises(ValueError):
        extrapolate(Classification("undetermined"), 0, 1)


# --- the three worked sequences ----------------------------------------------


def test_first_inner_sequence():
    rep = sequence_inner((2, 1), (2,), (4, 3, 2), 2, 7)
    assert [int(v) for v in rep.values] == [0, 960, 8576, 10624, 10624, 10624]
    assert rep.classification.kind == "constant" and rep.classification.value == 10624
    assert [e.s for e in rep.entries] == [3 * (2 + p) - 9 for p in range(2, 8)]
    assert rep.theorem_bound == 5


def test_outer_sequence_stabilizes_to_zero():
    rep = sequence_outer((1,), (2, 1), (3, 2), 1, 7)
    assert [int(v) for v in rep.values] == [0, 96, 1344, 1632, 0, 0, 0]
    assert rep.classification == Classification("constant", 0, 4)
    assert rep.from_p == 5


def test_outer_sequence_grows_linearly():
    rep = sequence_outer((1,), (3,), (2, 1), 1, 7)
    assert [int(v) for v in rep.values] == [0, 96, 704, 2048, 3712, 5376, 7040]
    assert rep.classification.kind == "arithmetic" and rep.classification.value == 1664


def test_very_negative_p_gives_zero():
    # p mu straightens to 0 when -p is not a part of mu
    rep = sequence_inner((2, 1), (2,), (4, 3, 2), -6, -3)
    assert rep.values == [0, 0, 0, 0]


@pytest.mark.parametrize(
    "kind,lam,mu,nu,p",
    [("inner", (2, 1), (2,), (4, 3, 2), 3), ("outer", (1,), (3,), (2, 1), 4), ("outer", (1,), (2, 1), (3, 2), 2)],
)
def test_value_is_scaled_q_coefficient(kind, lam, mu, nu, p):
    # independent route: expand in the Q basis and read off one coefficient
    fn = sequence_inner if kind == "inner" else sequence_outer
    entry = fn(lam, mu, nu, p, p).entries[0]
    if kind == "inner":
        c, tau = straighten(prepend(p, mu))
        F = pleth(q_lambda(lam), q_lambda(tau).scale(c))
    else:
        c, tau = straighten(prepend(p, lam))
        F = pleth(q_lambda(tau).scale(c), q_lambda(mu))
    d, target = straighten(prepend(entry.s, nu))
    coeff = to_q_basis(F).get(target, LaurentScalar()).constant()
    assert entry.value == d * 2 ** len(target) * coeff


def test_single_pole_fit_predicts_tail():
    # inner sequence for (1), (2), (2): fit the constant past the bound,
    # then check every later computed value
    bound = inner_theorem_bound((1,), (2,), (2,))
    rep = sequence_inner((1,), (2,), (2,), -3, bound + 5)
    by_p = {e.p: e.value for e in rep.entries}
    c = by_p[bound]
    assert all(by_p[p] == c for p in range(bound, bound + 6))
    assert c != 0


def test_double_pole_fit_predicts_tail():
    # outer sequence for (1), (1), (1): values along the tail are c1 + c2 (j + 1)
    bound = outer_theorem_bound((1,), (1,), (1,))
    rep = sequence_outer((1,), (1,), (1,), 0, bound + 6)
    by_p = {e.p: e.value for e in rep.entries}
    a, b = by_p[bound], by_p[bound + 1]
    c2 = b - a
    c1 = a - c2
    for j, p in enumerate(range(bound, bound + 7)):
        assert by_p[p] == c1 + c2 * (j + 1)
    assert c2 != 0


@pytest.mark.parametrize(
    "kind,lam,mu,nu",
    [("inner", (2, 1), (2,), (4, 3, 2)), ("outer", (1,), (2, 1), (3, 2)), ("outer", (1,), (3,), (2, 1)), ("inner", (2,), (1,), (3, 1))],
)
def test_theorem_bound_is_inside_observed_tail(kind, lam, mu, nu):
    fn = sequence_inner if kind == "inner" else sequence_outer
    bound = (inner_theorem_bound if kind == "inner" else outer_theorem_bound)(lam, mu, nu)
    rep = fn(lam, mu, nu, bound, bound + 4)
    assert rep.classification.kind in ("constant", "arithmetic")
    assert rep.classification.from_index == 0


def test_parallel_sweep_matches_serial():
    a = sequence_outer((1,), (3,), (2, 1), 1, 7, jobs=1).as_dict()
    b = sequence_outer((1,), (3,), (2, 1), 1, 7, jobs=3).as_dict()
    assert a == b


def test_sequence_errors():
    with pytest.raises(ValueError):
        sequence_inner((1, 1), (2,), (2,), 0, 3)
    with pytest.raises(ValueError):
        sequence_outer((1,), (2,), (2,), 5, 4)


def test_report_as_dict():
    d = sequence_outer((1,), (3,), (2, 1), 1, 7).as_dict()
    assert d["entries"][1] == {"p": 2, "s": 6, "value": 96}
    assert d["classification"] == {"kind": "arithmetic", "difference": 1664, "from_index": 3, "from_p": 4}
    assert d["theorem_bound"] == 5


# --- partial fractions --------------------------------------------------------


def test_partial_fraction_examples():
    r = partial_fraction(LaurentScalar(1), 1)
    assert r.laurent_part == 0 and r.pole_coefficients == (1,)
    r = partial_fraction(LaurentScalar({2: 1}), 1)
    assert r.laurent_part == LaurentScalar({0: -1, 1: -1}) and r.pole_coefficients == (1,)
    r = partial_fraction(LaurentScalar({1: 1}), 2)
    assert r.laurent_part == 0 and r.pole_coefficients == (-1, 1)


def _series(H, n, terms):
    # coefficients of Z^0..Z^{terms-1} of H / (1 - Z)^n for polynomial H
    out = [Fraction(0)] * terms
    for k, b in H.items():
        for j in range(terms - k):
            out[k + j] += b * comb(j + n - 1, n - 1)
    return out


def test_z_over_double_pole_series():
    r = partial_fraction(LaurentScalar({1: 1}), 2)
    # L + c1/(1-Z) + c2/(1-Z)^2 expanded: c1 + c2 (p + 1) for p >= 1
    series = _series(LaurentScalar({1: 1}), 2, 20)
    for p in range(20):
        pred = r.pole_coefficients[0] + r.pole_coefficients[1] * (p + 1) + r.laurent_part.coefficient(p)
        assert pred == series[p] == p


laurent = st.dictionaries(st.integers(-4, 6), st.integers(-5, 5), max_size=4).map(LaurentScalar)


@given(laurent, st.integers(-2, 4))
def test_partial_fraction_reconstructs(H, n):
    r = partial_fraction(H, n)
    assert len(r.pole_coefficients) == max(n, 0)
    if n >= 0:
        assert r.reconstruct(n) == H
    if H and n > 0 and H.valuation() >= 0:
        deg = r.laurent_part.degree()
        assert deg is None or deg <= max(H.degree() - n, 0)
