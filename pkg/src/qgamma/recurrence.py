"""Recurrence identities for q_n o q_m and q_n o Q_lam.

All checks are exact comparisons of power-sum expansions.  The (I, J) sums
run over nonnegative vectors with |I| + |J| <= n and (I + J).delta >= k;
every other term vanishes because q_r = 0 for r < 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .gamma_ring import GammaElement, qgen, weight_component
from .pairing import d_k_element
from .partitions import is_strict, prepend
from .plethysm import pleth
from .schur_q import from_q_basis, q_lambda, q_skew, to_q_basis

__all__ = [
    "IndexVector",
    "RecurrenceReport",
    "q_of_q",
    "index_pairs",
    "bk_terms",
    "bk_rhs",
    "verify_bk",
    "murnaghan_rhs",
    "verify_murnaghan",
    "verify_master",
    "verify_max_first_part",
    "as_prod_vertex_side",
    "as_prod_product_side",
]

IndexVector = tuple[int, ...]


@dataclass
class RecurrenceReport:
    lhs: GammaElement
    rhs: GammaElement
    equal: bool
    term_count: int

    def as_dict(self) -> dict:
        from .serialize import expansion_to_json

        return {
            "equal": self.equal,
            "term_count": self.term_count,
            "lhs": expansion_to_json(to_q_basis(self.lhs)),
            "rhs": expansion_to_json(to_q_basis(self.rhs)),
        }


@lru_cache(maxsize=None)
def q_of_q(i: int, j: int) -> GammaElement:
    """q_i o q_j (q_i o q_0 = 2 for i >= 1)."""
    if i < 0:
        return GammaElement.zero()
    return pleth(qgen(i), qgen(j))


def dot_delta(v: IndexVector) -> int:
    return sum(s * x for s, x in enumerate(v, start=1))


def _compositions_upto(total: int, parts: int) -> Iterator[IndexVector]:
    # all nonnegative vectors of the given length with sum <= total
    for v in itertools.product(range(total + 1), repeat=parts):
        if sum(v) <= total:
            yield v


def index_pairs(n: int, m: int, k: int, exact: bool = False) -> Iterator[tuple[IndexVector, IndexVector]]:
    """(I, J) with |I|+|J| <= n (or == n when exact) and (I+J).delta >= k."""
    for I in _compositions_upto(n, m):
        for J in _compositions_upto(n - sum(I), m):
            if exact and sum(I) + sum(J) != n:
                continue
            if dot_delta(I) + dot_delta(J) >= k:
                yield I, J


def _product_part(I: IndexVector, J: IndexVector, m: int) -> GammaElement:
    out = GammaElement.one()
    for s in range(1, m + 1):
        out = out * q_of_q(I[s - 1], m - s) * q_of_q(J[s - 1], m - s)
    return out


def _check_positive(**kw):
    for name, v in kw.items():
        if v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v}")


def bk_terms(n: int, m: int, k: int) -> dict[tuple[IndexVector, IndexVector], GammaElement]:
    """Nonzero (I, J) terms of the Butler-King analogue for D_k(q_n o q_m)."""
    _check_positive(n=n, m=m, k=k)
    out = {}
    for I, J in index_pairs(n, m, k):
        r = dot_delta(I) + dot_delta(J) - k
        term = qgen(r).scale((-1) ** r) * q_of_q(n - sum(I) - sum(J), m) * _product_part(I, J, m)
        if term:
            out[(I, J)] = term
    return out


def bk_rhs(n: int, m: int, k: int) -> tuple[GammaElement, int]:
    terms = bk_terms(n, m, k)
    total = GammaElement.zero()
    for t in terms.values():
        total = total + t
    return total, len(terms)


def verify_bk(n: int, m: int, k: int) -> RecurrenceReport:
    lhs = d_k_element(q_of_q(n, m), k)
    rhs, count = bk_rhs(n, m, k)
    return RecurrenceReport(lhs, rhs, lhs == rhs, count)


def murnaghan_rhs(n: int, m: int, k: int) -> tuple[GammaElement, int]:
    total = GammaElement.zero()
    count = 0
    for I, J in index_pairs(n, m, k, exact=True):
        r = dot_delta(I) + dot_delta(J) - k
        term = qgen(r).scale((-1) ** r) * _product_part(I, J, m)
        if term:
            count += 1
            total = total + term
    return total, count


def verify_murnaghan(n: int, m: int, k: int, literal_bound: bool = False) -> RecurrenceReport:
    """sum_p (-1)^p q_p(q_m) D_k q_{n-p}(q_m) against the |I|+|J| = n sum.

    The sum runs over every p with (n-p) m >= k, since only those
    D_k q_{n-p}(q_m) can be nonzero.  literal_bound=True stops at p = n - k
    instead, which drops nonzero terms once m > 1.
    """
    _check_positive(n=n, m=m, k=k)
    if k > n:
        raise ValueError(f"need k <= n, got k={k}, n={n}")
    top = n - k if literal_bound else n - -(-k // m)
    lhs = GammaElement.zero()
    for p in range(0, top + 1):
        lhs = lhs + (q_of_q(p, m) * d_k_element(q_of_q(n - p, m), k)).scale((-1) ** p)
    rhs, count = murnaghan_rhs(n, m, k)
    return RecurrenceReport(lhs, rhs, lhs == rhs, count)


def verify_master(m: int, k: int, W: int) -> RecurrenceReport:
    """Weight-by-weight check of D_k kappa_1(q_m) = kappa_1(q_m) * (...).

    The weight nm - k component is exactly the Butler-King instance (n, m, k),
    so the master identity up to weight W is the conjunction of those.
    """
    _check_positive(m=m, k=k)
    lhs = GammaElement.zero()
    rhs = GammaElement.zero()
    count = 0
    n = 1
    while n * m - k <= W:
        if n * m - k >= 0:
            rep = verify_bk(n, m, k)
            lhs = lhs + rep.lhs
            rhs = rhs + rep.rhs
            count += rep.term_count
            if not rep.equal:
                return RecurrenceReport(lhs, rhs, False, count)
        n += 1
    return RecurrenceReport(lhs, rhs, lhs == rhs, count)


def verify_max_first_part(n: int, lam) -> RecurrenceReport:
    """D_{n lam_1}(q_n o Q_lam) = q_n o (2 Q_{lam/(lam_1)})."""
    lam = tuple(lam)
    if not lam:
        raise ValueError("lambda must be nonempty")
    if not is_strict(lam):
        raise ValueError(f"lambda must be strict, got {lam}")
    _check_positive(n=n)
    lhs = d_k_element(pleth(qgen(n), q_lambda(lam)), n * lam[0])
    rhs = pleth(qgen(n), q_skew(lam, (lam[0],)).scale(2))
    return RecurrenceReport(lhs, rhs, lhs == rhs, 0)


# --- product form of the vertex operator on kappa_1(q_m) ------------------


def as_prod_vertex_side(m: int, w: int, p: int) -> GammaElement:
    """Weight-w part of the z^p coefficient of kappa_z kappa_{-1/z}^perp kappa_1(q_m).

    Computed from the Q-expansion b_g of q_l o q_m (l m = w - p) as
    sum_g b_g Q_{p g}, each Q_{p g} by its Pfaffian.
    """
    if (w - p) < 0 or (w - p) % m:
        return GammaElement.zero()
    ell = (w - p) // m
    out = GammaElement.zero()
    for gamma, c in to_q_basis(q_of_q(ell, m)).items():
        out = out + q_lambda(prepend(p, gamma)) * GammaElement.constant(c)
    return out


def as_prod_product_side(m: int, w: int, p: int) -> GammaElement:
    """Same coefficient from kappa_z(A) kappa_1(q_m) (prod_n kappa_{(-1/z)^n}(q_{m-n}))^2."""
    budget = w - p  # (I + J).delta = r - p <= w - p
    out = GammaElement.zero()
    if budget < 0:
        return out
    ranges = [range(budget // s + 1) for s in range(1, m + 1)]
    for I in itertools.product(*ranges):
        dI = dot_delta(I)
        if dI > budget:
            continue
        for J in itertools.product(*ranges):
            d = dI + dot_delta(J)
            if d > budget:
                continue
            r = p + d
            rest = w - r - sum((I[s - 1] + J[s - 1]) * (m - s) for s in range(1, m + 1))
            if rest < 0 or rest % m:
                continue
            term = qgen(r) * q_of_q(rest // m, m) * _product_part(I, J, m)
            out = out + term.scale((-1) ** d)
    return weight_component(out, w)
