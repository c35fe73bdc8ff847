from fractions import Fraction

import pytest
from hypothesis import given

from qgamma import GammaElement, LaurentScalar
from qgamma.gamma_ring import qgen, substitute_letter
from qgamma.pairing import d_k, d_k_element, inner, kappa, perp, series_perp
from qgamma.partitions import contains, prepend, strict_partitions_upto
from qgamma.plethysm import pleth
from qgamma.schur_q import from_q_basis, q_lambda, q_skew, to_q_basis

from strategies import gamma_elements

P = GammaElement.p
z = GammaElement.letter


def test_inner_examples():
    assert inner(q_lambda((3, 2)), q_lambda((3, 2))) == 4
    assert inner(q_lambda((3,)), q_lambda((2, 1))) == 0
    assert inner(P(3), P(3)) == Fraction(3, 2)
    assert inner(P(3, 1), P(1, 3)) == Fraction(3, 4)


def test_inner_is_bilinear_over_laurent_scalars():
    F = q_lambda((2, 1)) * z(3, 2)
    G = q_lambda((2, 1)) * z(1, -5)
    assert inner(F, G) == LaurentScalar({-3: 12})


@pytest.mark.parametrize("w", range(0, 9))
def test_q_basis_is_orthogonal(w):
    basis = [lam for lam in strict_partitions_upto(w) if sum(lam) == w]
    for a in basis:
        for b in basis:
            assert inner(q_lambda(a), q_lambda(b)) == (2 ** len(a) if a == b else 0)


def test_perp_examples():
    assert perp(qgen(1), q_lambda((3, 1))) == q_skew((3, 1), (1,)).scale(2)
    F = q_lambda((4, 1)) + qgen(2)
    assert perp(GammaElement.one(), F) == F
    assert perp(P(3), P(3)) == Fraction(3, 2)
    assert perp(P(5), P(3)).is_zero()


@given(gamma_elements(max_terms=3), gamma_elements(max_terms=3), gamma_elements(max_terms=3))
def test_perp_is_adjoint_to_multiplication(F, G, H):
    assert inner(perp(F, G), H) == inner(G, F * H)


@pytest.mark.parametrize("lam", [lam for lam in strict_partitions_upto(8) if lam])
def test_q_r_perp_is_skewing(lam):
    Q = q_lambda(lam)
    for r in range(1, 7):
        assert perp(qgen(r), Q) == q_skew(lam, (r,)).scale(2)


@pytest.mark.parametrize("lam", [(3, 1), (4, 2, 1), (5, 3), (6, 2)])
def test_skew_identity(lam):
    Q = q_lambda(lam)
    for mu in strict_partitions_upto(sum(lam)):
        if not contains(lam, mu):
            continue
        for g in strict_partitions_upto(sum(lam) - sum(mu)):
            if sum(g) != sum(lam) - sum(mu):
                continue
            F = q_lambda(g)
            rhs = inner(Q, (q_lambda(mu) * F).scale(Fraction(1, 2 ** len(mu))))
            assert inner(q_skew(lam, mu), F) == rhs


def test_series_perp_is_letter_shift():
    Q = q_lambda((3, 1))
    w = Q.max_weight()
    expected = Q + sum((q_skew((3, 1), (r,)) * z(2, r) for r in range(1, 4)), GammaElement.zero())
    assert series_perp(kappa(w), Q) == expected
    assert series_perp(kappa(w), Q) == substitute_letter(Q)
    assert series_perp(kappa(3), GammaElement.one()) == 1


@given(gamma_elements())
def test_series_perp_at_minus_z(F):
    w = F.max_weight()
    assert series_perp(kappa(w, -1), F) == substitute_letter(F, -1, 1)


def test_kappa_truncation():
    k = kappa(3, 2, -1)
    assert k == 1 + qgen(1) * z(2, -1) + qgen(2) * z(4, -2) + qgen(3) * z(8, -3)


def test_d_k_examples():
    E = {(5, 1): 10, (3, 2, 1): 2, (6,): 6, (4, 2): 14}
    assert d_k(E, 1) == {(5,): -20, (3, 2): 4}
    assert d_k({(3, 2): 1}, 5) == {}
    for k in range(1, 6):
        assert d_k({(k,): 1}, k) == {(): 2}
    with pytest.raises(ValueError):
        d_k(E, 0)


def test_d_k_element_on_plethysm():
    lhs = d_k_element(pleth(qgen(3), qgen(2)), 1)
    assert lhs == from_q_basis({(5,): -20, (3, 2): 4})


@pytest.mark.parametrize("lam", [lam for lam in strict_partitions_upto(7) if lam])
def test_d_k_is_negative_prepend(lam):
    for k in range(1, 7):
        lhs = from_q_basis(d_k(to_q_basis(q_lambda(lam)), k))
        assert lhs == q_lambda(prepend(-k, lam)).scale((-1) ** k)
