"""Deterministic JSON forms of ring elements and Q-expansions.

GammaElement: [{"partition": "3,1,1", "coeff": [{"exp": 0, "num": 4, "den": 3}, ...]}, ...]
QExpansion:   [{"partition": "5,1", "coeff": 10}, ...]

Both lists are ordered reverse-lexicographically by partition, Laurent
terms by exponent.  A Q-expansion coefficient is an int when integral, a
"num/den" string for other rationals and a Laurent term list otherwise.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Mapping

from .gamma_ring import GammaElement, LaurentScalar
from .partitions import format_partition, parse_partition

__all__ = [
    "laurent_to_json",
    "laurent_from_json",
    "gamma_to_json",
    "gamma_from_json",
    "expansion_to_json",
    "expansion_from_json",
    "dumps",
]


def _rl(part: tuple[int, ...]):
    return tuple(-x for x in part) + (1,)


def laurent_to_json(c: LaurentScalar) -> list[dict]:
    return [{"exp": e, "num": v.numerator, "den": v.denominator} for e, v in c.items()]


def laurent_from_json(data: list[Mapping]) -> LaurentScalar:
    return LaurentScalar({int(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in data})


def gamma_to_json(F: GammaElement) -> list[dict]:
    grouped: dict[tuple[int, ...], dict[int, Fraction]] = {}
    for mu, e, c in F.terms():
        grouped.setdefault(mu, {})[e] = c
    return [
        {"partition": format_partition(mu), "coeff": laurent_to_json(LaurentScalar(grouped[mu]))}
        for mu in sorted(grouped, key=_rl)
    ]


def gamma_from_json(data: list[Mapping]) -> GammaElement:
    terms = {}
    for entry in data:
        mu = parse_partition(entry["partition"])
        for t in entry["coeff"]:
            terms[(mu, int(t["exp"]))] = Fraction(int(t["num"]), int(t["den"]))
    return GammaElement(terms)


def _coeff_to_json(c: LaurentScalar) -> Any:
    if c.is_constant():
        v = c.constant()
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return laurent_to_json(c)


def _coeff_from_json(data: Any) -> LaurentScalar:
    if isinstance(data, int):
        return LaurentScalar(data)
    if isinstance(data, str):
        return LaurentScalar(Fraction(data))
    return laurent_from_json(data)


def expansion_to_json(E: Mapping) -> list[dict]:
    out = []
    for lam in sorted(E, key=_rl):
        c = E[lam] if isinstance(E[lam], LaurentScalar) else LaurentScalar(E[lam])
        if c:
            out.append({"partition": format_partition(lam), "coeff": _coeff_to_json(c)})
    return out


def expansion_from_json(data: list[Mapping]) -> dict:
    return {parse_partition(e["partition"]): _coeff_from_json(e["coeff"]) for e in data}


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2)
