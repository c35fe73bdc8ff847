"""Inner product on Gamma, adjoint operators and the part-removal operator D_k.

On power sums the form is diagonal: <p_mu, p_nu> = delta * z_mu / 2^{l(mu)},
which makes (Q_lam, Q_mu) = 2^{l(lam)} delta.  The adjoint of multiplication
by p_n is (n/2) d/dp_n.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import factorial
from typing import Mapping

from .gamma_ring import GammaElement, LaurentScalar, qgen
from .partitions import z_mu
from .schur_q import QExpansion, clean_expansion

__all__ = ["inner", "perp", "series_perp", "kappa", "d_k", "d_k_element"]


def _norm(mu: tuple[int, ...]) -> Fraction:
    return Fraction(z_mu(mu), 2 ** len(mu))


def inner(F: GammaElement, G: GammaElement) -> LaurentScalar:
    """Bilinear pairing over Laurent scalars."""
    a, b = F.raw_items(), dict(G.raw_items())
    if len(b) < len(F):
        a, b = G.raw_items(), dict(F.raw_items())
    by_mu: dict[tuple[int, ...], list[tuple[int, Fraction]]] = {}
    for (mu, e), c in b.items():
        by_mu.setdefault(mu, []).append((e, c))
    out: dict[int, Fraction] = {}
    for (mu, e1), c1 in a:
        hits = by_mu.get(mu)
        if not hits:
            continue
        n = _norm(mu)
        for e2, c2 in hits:
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2 * n
    return LaurentScalar(out)


def _perp_monomial(mu: tuple[int, ...], nu: tuple[int, ...]) -> tuple[Fraction, tuple[int, ...]] | None:
    # p_mu^perp applied to p_nu
    need = Counter(mu)
    have = Counter(nu)
    coeff = Fraction(1)
    for part, k in need.items():
        m = have.get(part, 0)
        if m < k:
            return None
        coeff *= Fraction(part, 2) ** k * Fraction(factorial(m), factorial(m - k))
        have[part] = m - k
    rest = tuple(sorted(have.elements(), reverse=True))
    return coeff, rest


def perp(F: GammaElement, G: GammaElement) -> GammaElement:
    """F^perp G, bilinear in both arguments (z-exponents add)."""
    out: dict = {}
    for (mu, e1), c1 in F.raw_items():
        for (nu, e2), c2 in G.raw_items():
            hit = _perp_monomial(mu, nu)
            if hit is None:
                continue
            c, rest = hit
            key = (rest, e1 + e2)
            out[key] = out.get(key, 0) + c1 * c2 * c
    return GammaElement({k: v for k, v in out.items() if v})


def kappa(order: int, c: int = 1, e: int = 1) -> GammaElement:
    """Truncation sum_{n=0}^{order} q_n * (c z^e)^n of kappa at c z^e."""
    out = GammaElement.zero()
    for n in range(order + 1):
        out = out + qgen(n) * GammaElement.letter(Fraction(c) ** n, e * n)
    return out


def series_perp(F: GammaElement, G: GammaElement, window: tuple[int, int] | None = None) -> GammaElement:
    """sum_n z^n F_n^perp G for a z-series F.

    F_n^perp kills everything of weight below the weight of F_n, so with a
    homogeneous-by-degree series (F_n of weight n) only |n| <= max weight of
    G contributes.  The default window is exactly that range.
    """
    if window is None:
        wmax = G.max_weight()
        window = (-wmax, wmax)
    lo, hi = window
    return perp(F.truncate_z(lo, hi), G)


def d_k(E: Mapping, k: int) -> QExpansion:
    """D_k: remove a part equal to k from each Q-index, sign (-1)^{i+1}, factor 2."""
    if k <= 0:
        raise ValueError(f"D_k needs k >= 1, got {k}")
    out: dict[tuple[int, ...], LaurentScalar] = {}
    for lam, c in clean_expansion(E).items():
        if k not in lam:
            continue
        i = lam.index(k) + 1
        key = lam[: i - 1] + lam[i:]
        val = c * (2 * (-1) ** (i + 1))
        out[key] = out.get(key, LaurentScalar()) + val
    return clean_expansion(out)


def d_k_element(F: GammaElement, k: int) -> GammaElement:
    """D_k on an element, routed through its Q-basis expansion."""
    from .schur_q import from_q_basis, to_q_basis

    return from_q_basis(d_k(to_q_basis(F), k))
