"""Compositions, strict partitions and straightening of Q-indices.

Compositions are plain tuples of ints and are never normalised implicitly.
A strict partition is a tuple of strictly decreasing positive ints.
"""

from __future__ import annotations

from collections import Counter
from math import factorial
from typing import Iterator, NamedTuple, Sequence

Composition = tuple[int, ...]
StrictPartition = tuple[int, ...]


class StraightenResult(NamedTuple):
    """Q_lambda = coefficient * Q_partition; partition is None when coefficient is 0."""

    coefficient: int
    partition: StrictPartition | None


ZERO = StraightenResult(0, None)


def is_partition(lam: Sequence[int]) -> bool:
    return all(x >= 0 for x in lam) and all(a >= b for a, b in zip(lam, lam[1:]))


def is_strict(lam: Sequence[int]) -> bool:
    return all(x > 0 for x in lam) and all(a > b for a, b in zip(lam, lam[1:]))


def length(lam: Sequence[int]) -> int:
    """Number of nonzero parts."""
    return sum(1 for x in lam if x != 0)


def weight(lam: Sequence[int]) -> int:
    return sum(lam)


def prepend(p: int, lam: Sequence[int]) -> Composition:
    return (p,) + tuple(lam)


def remove_part(lam: Sequence[int], i: int) -> Composition:
    """Delete the i-th entry (1-based)."""
    if not 1 <= i <= len(lam):
        raise IndexError(f"part index {i} out of range for {tuple(lam)}")
    lam = tuple(lam)
    return lam[: i - 1] + lam[i:]


def z_mu(mu: Sequence[int]) -> int:
    """Centraliser order prod_i i^{m_i} m_i!."""
    out = 1
    for part, mult in Counter(mu).items():
        if part <= 0:
            raise ValueError(f"z_mu needs positive parts, got {tuple(mu)}")
        out *= part**mult * factorial(mult)
    return out


def _partitions_max(n: int, largest: int, step: int, distinct: bool) -> Iterator[tuple[int, ...]]:
    # parts drawn from {largest, largest - step, ...}, reverse-lex order
    if n == 0:
        yield ()
        return
    part = min(largest, n)
    if step == 2 and part % 2 != largest % 2:
        part -= 1
    while part > 0:
        nxt = part - step if distinct else part
        for rest in _partitions_max(n - part, nxt, step, distinct):
            yield (part,) + rest
        part -= step


def partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of n in reverse lexicographic order."""
    if n < 0:
        return []
    return list(_partitions_max(n, n, 1, False))


def odd_partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of n into odd parts, reverse lexicographic."""
    if n < 0:
        return []
    top = n if n % 2 else n - 1
    return list(_partitions_max(n, max(top, 1), 2, False))


def strict_partitions(n: int) -> list[StrictPartition]:
    """Strict partitions of n, reverse lexicographic (decreasing lex)."""
    if n < 0:
        return []
    return list(_partitions_max(n, n, 1, True))


def strict_partitions_upto(w: int) -> list[StrictPartition]:
    return [lam for n in range(w + 1) for lam in strict_partitions(n)]


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Diagram containment mu <= lam for partitions."""
    if length(mu) > length(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def _insert(x: int, tau: StrictPartition) -> StraightenResult:
    """Straighten the composition x*tau with tau strict."""
    if x == 0:
        # zero travels to the end; every swap past a nonzero part costs a sign
        return StraightenResult((-1) ** len(tau), tau)
    if x > 0:
        if x in tau:
            return ZERO
        above = sum(1 for t in tau if t > x)
        return StraightenResult((-1) ** above, tau[:above] + (x,) + tau[above:])
    p = -x
    for i, t in enumerate(tau, start=1):
        if t == p:
            return StraightenResult((-1) ** (p + i + 1) * 2, tau[: i - 1] + tau[i:])
    return ZERO


def straighten(lam: Sequence[int]) -> StraightenResult:
    """Rewrite Q_lam as c * Q_tau with tau strict (or c = 0).

    Parts are absorbed from the right: the suffix is already straightened,
    and the next part is inserted by exchange (sign per swap) or, when
    negative, removed together with its positive partner.
    """
    coeff = 1
    tau: StrictPartition = ()
    for x in reversed(tuple(lam)):
        c, tau = _insert(x, tau)
        if c == 0:
            return ZERO
        coeff *= c
    return StraightenResult(coeff, tau)


def parse_partition(text: str) -> Composition:
    """Parse "a,b,c" (empty string gives the empty composition)."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed partition {text!r}; expected comma-separated integers") from None


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(x) for x in lam)
