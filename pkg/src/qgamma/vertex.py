"""The twisted vertex operator kappa_z * kappa_{-1/z}^perp.

Applied to Q_lam its z^p coefficient is Q_{p lam}.  We never build the
bilateral series: kappa_{-1/z}^perp F is the substitution F(A - 1/z), whose
z-support lies in [-wt F, 0], so each requested coefficient is a finite sum.
"""

from __future__ import annotations

from .gamma_ring import GammaElement, qgen, substitute_letter
from .pairing import kappa, series_perp

VertexExpansion = dict  # int -> GammaElement

__all__ = ["VertexExpansion", "vertex_apply", "shifted_eval"]


def vertex_apply(F: GammaElement, p_min: int, p_max: int) -> VertexExpansion:
    """z^p coefficients of kappa_z kappa_{-1/z}^perp F for p_min <= p <= p_max."""
    if not F.is_z_free():
        raise ValueError("vertex_apply needs a z-free element")
    if p_min > p_max:
        raise ValueError(f"empty window {p_min}..{p_max}")
    G = substitute_letter(F, sign=-1, direction=-1)
    pieces = {k: G.z_coefficient(-k) for k in range(F.max_weight() + 1)}
    pieces = {k: g for k, g in pieces.items() if g}
    out: VertexExpansion = {}
    for p in range(p_min, p_max + 1):
        acc = GammaElement.zero()
        for k, g in pieces.items():
            q = qgen(p + k)
            if q:
                acc = acc + q * g
        out[p] = acc
    return out


def shifted_eval(F: GammaElement, check: bool = True) -> GammaElement:
    """F(A + z), checked against kappa_z^perp F when check is set."""
    out = substitute_letter(F, sign=1, direction=1)
    if check:
        w = F.max_weight()
        via_perp = series_perp(kappa(w), F, window=(0, w))
        if via_perp != out:
            raise ArithmeticError("kappa_z^perp F disagrees with F(A+z)")
    return out
