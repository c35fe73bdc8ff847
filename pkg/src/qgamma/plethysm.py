"""Plethysm on Gamma tensor Q[z, 1/z] by power-sum substitution.

p_n o p_m = p_{nm}; p_n o (c z^k) = c z^{nk} for rational c, so scalars act
as (possibly negative or fractional) multiples of an alphabet and z acts as
a letter.  F o G is then the ring map p_n -> p_n o G applied to F.
"""

from __future__ import annotations

from .gamma_ring import GammaElement, map_power_sums
from .schur_q import q_lambda, q_skew

__all__ = ["pleth_pn", "pleth", "sum_rule_expand", "skew_sum_rule_expand"]


def pleth_pn(n: int, G: GammaElement) -> GammaElement:
    """p_n o G: every power-sum index and z-exponent is multiplied by n."""
    if n < 1:
        raise ValueError(f"pleth_pn needs n >= 1, got {n}")
    if n == 1:
        return G
    return GammaElement._raw({(tuple(n * x for x in mu), n * e): c for (mu, e), c in G.raw_items()})


def pleth(F: GammaElement, G: GammaElement) -> GammaElement:
    """F o G for z-free F."""
    if not F.is_z_free():
        raise ValueError("left plethysm argument must be z-free")
    images: dict[int, GammaElement] = {}

    def image(n: int) -> GammaElement:
        if n not in images:
            images[n] = pleth_pn(n, G)
        return images[n]

    return map_power_sums(F, image)


def sum_rule_expand(lam) -> GammaElement:
    """Q_lam(A + z) = Q_lam + 2 sum_{i>=1} Q_{lam/(i)} z^i."""
    lam = tuple(lam)
    out = q_lambda(lam) if lam else GammaElement.one()
    top = lam[0] if lam else 0
    for i in range(1, top + 1):
        out = out + q_skew(lam, (i,)) * GammaElement.letter(2, i)
    return out


def skew_sum_rule_expand(lam, mu) -> GammaElement:
    """Q_{lam/mu}(A + z) = sum_nu Q_{lam/nu}(A) Q_{nu/mu}(z).

    Q_{nu/mu}(z) is evaluated honestly on the one-letter alphabet, so this
    path does not assume which nu contribute.
    """
    from .gamma_ring import evaluate_letter
    from .partitions import contains, partitions

    lam, mu = tuple(lam), tuple(mu)
    out = GammaElement.zero()
    for w in range(sum(mu), sum(lam) + 1):
        for nu in partitions(w):
            if not contains(lam, nu) or not contains(nu, mu):
                continue
            inner_part = evaluate_letter(q_skew(nu, mu))
            if inner_part:
                out = out + q_skew(lam, nu) * inner_part
    return out
