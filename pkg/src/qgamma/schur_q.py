"""Pfaffian construction of Schur Q-functions and the Q-basis conversion."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .gamma_ring import GammaElement, LaurentScalar, qgen
from .partitions import StrictPartition, is_partition, strict_partitions

QExpansion = dict  # StrictPartition -> LaurentScalar

__all__ = [
    "QExpansion",
    "q_rs",
    "pfaffian",
    "check_antisymmetric",
    "q_matrix",
    "skew_matrix",
    "q_lambda",
    "q_skew",
    "to_q_basis",
    "from_q_basis",
    "clean_expansion",
]


@lru_cache(maxsize=None)
def q_rs(r: int, s: int) -> GammaElement:
    """Q_(r,s) = q_r q_s + 2 sum_{i=1}^{s} (-1)^i q_{r+i} q_{s-i}."""
    out = qgen(r) * qgen(s)
    for i in range(1, s + 1):
        out = out + (qgen(r + i) * qgen(s - i)).scale(2 * (-1) ** i)
    return out


def check_antisymmetric(M: Sequence[Sequence[GammaElement]]) -> None:
    n = len(M)
    for row in M:
        if len(row) != n:
            raise ValueError("matrix is not square")
    for i in range(n):
        if M[i][i]:
            raise ValueError(f"nonzero diagonal entry at {i}")
        for j in range(i + 1, n):
            if M[i][j] + M[j][i]:
                raise ValueError(f"entries ({i},{j}) and ({j},{i}) are not negatives")


def pfaffian(M: Sequence[Sequence[GammaElement]], check: bool = True) -> GammaElement:
    """Pfaffian by first-row expansion, memoised on the remaining index set."""
    n = len(M)
    if n % 2:
        raise ValueError(f"Pfaffian needs even dimension, got {n}")
    if check:
        check_antisymmetric(M)
    memo: dict[tuple[int, ...], GammaElement] = {}

    def pf(idx: tuple[int, ...]) -> GammaElement:
        if not idx:
            return GammaElement.one()
        if idx in memo:
            return memo[idx]
        first, rest = idx[0], idx[1:]
        total = GammaElement.zero()
        for pos, j in enumerate(rest):
            entry = M[first][j]
            if not entry:
                continue
            sub = pf(rest[:pos] + rest[pos + 1 :])
            term = entry * sub
            total = total + (term if pos % 2 == 0 else -term)
        memo[idx] = total
        return total

    return pf(tuple(range(n)))


def q_matrix(lam: Sequence[int]) -> list[list[GammaElement]]:
    """M(lam), padding with a trailing zero part when the length is odd."""
    lam = tuple(lam)
    if len(lam) % 2:
        lam = lam + (0,)
    n = len(lam)
    zero = GammaElement.zero()
    M = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            M[i][j] = q_rs(lam[i], lam[j])
            M[j][i] = -M[i][j]
    return M


@lru_cache(maxsize=None)
def _q_lambda(lam: tuple[int, ...]) -> GammaElement:
    if len(lam) == 0:
        return GammaElement.one()
    if len(lam) == 1:
        return qgen(lam[0])
    if len(lam) == 2:
        return q_rs(*lam)
    return pfaffian(q_matrix(lam), check=False)


def q_lambda(lam: Sequence[int]) -> GammaElement:
    """Q_lam for an arbitrary integer composition (Pfaffian definition)."""
    return _q_lambda(tuple(int(x) for x in lam))


def skew_matrix(lam: Sequence[int], mu: Sequence[int]) -> list[list[GammaElement]]:
    """The block matrix M(lam, mu); lam gets a zero part when n + m is odd."""
    lam, mu = tuple(lam), tuple(mu)
    if (len(lam) + len(mu)) % 2:
        lam = lam + (0,)
    n, m = len(lam), len(mu)
    zero = GammaElement.zero()
    size = n + m
    M = [[zero] * size for _ in range(size)]
    for i in range(n):
        for j in range(i + 1, n):
            M[i][j] = q_rs(lam[i], lam[j])
            M[j][i] = -M[i][j]
    # N(lam, mu): columns run mu_m, ..., mu_1
    for i in range(n):
        for c in range(m):
            entry = qgen(lam[i] - mu[m - 1 - c])
            M[i][n + c] = entry
            M[n + c][i] = -entry
    return M


@lru_cache(maxsize=None)
def _q_skew(lam: tuple[int, ...], mu: tuple[int, ...]) -> GammaElement:
    if not mu:
        return _q_lambda(lam)
    return pfaffian(skew_matrix(lam, mu), check=False)


def q_skew(lam: Sequence[int], mu: Sequence[int]) -> GammaElement:
    """Skew Q_{lam/mu} for partitions lam, mu."""
    if not is_partition(lam) or not is_partition(mu):
        raise ValueError(f"q_skew needs partitions, got {tuple(lam)} / {tuple(mu)}")
    lam = tuple(x for x in lam if x)
    mu = tuple(x for x in mu if x)
    return _q_skew(lam, mu)


def clean_expansion(E: Mapping) -> QExpansion:
    out: QExpansion = {}
    for lam, c in E.items():
        c = c if isinstance(c, LaurentScalar) else LaurentScalar(c)
        if c:
            out[tuple(lam)] = c
    return out


def to_q_basis(F: GammaElement) -> QExpansion:
    """Expand F in the Q basis by peeling 2^{-l(g)} (F, Q_g) off each weight."""
    from .pairing import inner

    out: QExpansion = {}
    residual = F
    for w in sorted(F.weights()):
        for gamma in strict_partitions(w):
            if residual.is_zero():
                break
            Qg = q_lambda(gamma)
            c = inner(residual, Qg) * Fraction(1, 2 ** len(gamma))
            if c:
                out[gamma] = c
                residual = residual - Qg * GammaElement.constant(c)
    if residual:
        raise ArithmeticError(f"nonzero residual after Q-basis expansion: {residual}")
    return out


def from_q_basis(E: Mapping[StrictPartition, LaurentScalar | int | Fraction]) -> GammaElement:
    out = GammaElement.zero()
    for lam, c in E.items():
        if isinstance(c, LaurentScalar):
            out = out + q_lambda(lam) * GammaElement.constant(c)
        else:
            out = out + q_lambda(lam).scale(c)
    return out
