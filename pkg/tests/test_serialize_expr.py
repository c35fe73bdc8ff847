import json
from fractions import Fraction

import pytest
from hypothesis import given

from qgamma import GammaElement, LaurentScalar
from qgamma.expr import ExpressionError, parse
from qgamma.gamma_ring import pgen, qgen
from qgamma.plethysm import pleth
from qgamma.schur_q import q_lambda, to_q_basis
from qgamma.serialize import (
    dumps,
    expansion_from_json,
    expansion_to_json,
    gamma_from_json,
    gamma_to_json,
    laurent_from_json,
    laurent_to_json,
)

from strategies import gamma_elements

z = GammaElement.letter


# --- JSON forms ---------------------------------------------------------------


def test_expansion_json_layout():
    E = to_q_basis(pleth(qgen(3), qgen(2)))
    assert expansion_to_json(E) == [
        {"partition": "6", "coeff": 6},
        {"partition": "5,1", "coeff": 10},
        {"partition": "4,2", "coeff": 14},
        {"partition": "3,2,1", "coeff": 2},
    ]


def test_expansion_json_coefficient_kinds():
    E = {(): Fraction(1, 3), (2,): LaurentScalar({-1: 2, 0: 1}), (1,): 0}
    data = expansion_to_json(E)
    assert data == [
        {"partition": "2", "coeff": [{"exp": -1, "num": 2, "den": 1}, {"exp": 0, "num": 1, "den": 1}]},
        {"partition": "", "coeff": "1/3"},
    ]
    back = expansion_from_json(json.loads(dumps(data)))
    assert back == {(): LaurentScalar(Fraction(1, 3)), (2,): LaurentScalar({-1: 2, 0: 1})}


def test_laurent_round_trip():
    c = LaurentScalar({-2: Fraction(-5, 7), 3: 1})
    assert laurent_from_json(laurent_to_json(c)) == c


@given(gamma_elements(with_z=True))
def test_gamma_round_trip(F):
    data = json.loads(dumps(gamma_to_json(F)))
    assert gamma_from_json(data) == F


def test_gamma_json_is_ordered():
    F = pgen(1) + pgen(3) + GammaElement.p(1, 1, 1)
    assert [row["partition"] for row in gamma_to_json(F)] == ["3", "1,1,1", "1"]


# --- expression language ---------------------------------------------------------


def test_parse_atoms():
    assert parse("q[3]") == qgen(3)
    assert parse("Q[3,1]") == q_lambda((3, 1))
    assert parse("Q[-3,3,1]") == q_lambda((1,)).scale(-2)
    assert parse("p[5]") == pgen(5)
    assert parse("z") == z(1, 1)
    assert parse("z^-2") == z(1, -2)
    assert parse("z^(-2)") == z(1, -2)
    assert parse("7") == 7


def test_parse_precedence():
    q1, q2, q3 = qgen(1), qgen(2), qgen(3)
    assert parse("q[3] o q[2]") == pleth(q3, q2)
    assert parse("q[1] + q[2] * q[3]") == q1 + q2 * q3
    assert parse("2 * q[2] o q[1]") == pleth(q2, q1).scale(2)
    assert parse("q[1]^2 - 2*q[2]") == 0
    assert parse("-(q[1] - z)") == z(1, 1) - q1
    assert parse("q[2] o q[1] o q[1]") == pleth(pleth(q2, q1), q1)


def test_parse_variables():
    assert parse("Q[p,2]", {"p": 4}) == q_lambda((4, 2))
    assert parse("Q[p+1,p-1]", {"p": 3}) == q_lambda((4, 2))
    assert parse("Q[-p,2]", {"p": 2}) == q_lambda((-2, 2))


@pytest.mark.parametrize(
    "text",
    ["q[", "q[1,2]", "Q[x]", "p[0]", "q[1] +", "z o q[1]", "q[1] q[2]", "q[1]^-1", "$", "Q[1,2"],
)
def test_parse_errors(text):
    with pytest.raises(ExpressionError):
        parse(text)
