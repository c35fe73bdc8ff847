"""Exact arithmetic with Schur Q-functions: Pfaffians, plethysm, vertex
operators, plethysm stability sequences and recurrence checks."""

from .gamma_ring import GammaElement, LaurentScalar, evaluate_letter, qgen, substitute_letter, weight_component
from .pairing import d_k, inner, perp, series_perp
from .partitions import odd_partitions, straighten, strict_partitions, strict_partitions_upto, z_mu
from .plethysm import pleth, pleth_pn, sum_rule_expand
from .schur_q import from_q_basis, pfaffian, q_lambda, q_rs, q_skew, to_q_basis
from .stability import classify_tail, partial_fraction, sequence_inner, sequence_outer
from .vertex import shifted_eval, vertex_apply

__version__ = "0.1.0"

__all__ = [
    "GammaElement",
    "LaurentScalar",
    "evaluate_letter",
    "qgen",
    "substitute_letter",
    "weight_component",
    "d_k",
    "inner",
    "perp",
    "series_perp",
    "odd_partitions",
    "straighten",
    "strict_partitions",
    "strict_partitions_upto",
    "z_mu",
    "pleth",
    "pleth_pn",
    "sum_rule_expand",
    "from_q_basis",
    "pfaffian",
    "q_lambda",
    "q_rs",
    "q_skew",
    "to_q_basis",
    "classify_tail",
    "partial_fraction",
    "sequence_inner",
    "sequence_outer",
    "shifted_eval",
    "vertex_apply",
]
