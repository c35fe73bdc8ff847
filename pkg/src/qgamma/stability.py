"""Plethysm-coefficient sequences and their tails.

inner sequence:  (Q_lam o Q_{p mu}, Q_{s nu}),  s = |lam| (|mu| + p) - |nu|
outer sequence:  (Q_{p lam} o Q_mu, Q_{s nu}),  s = (|lam| + p) |mu| - |nu|

Values are exact.  Tail classification is observational (window based); the
theorem bound is the first p whose s exceeds the degree of the polynomial
part of the generating series, after which the pure tail is guaranteed.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .gamma_ring import GammaElement, LaurentScalar
from .pairing import inner
from .partitions import is_strict, prepend, straighten
from .plethysm import pleth
from .schur_q import q_lambda

__all__ = [
    "Classification",
    "SequenceEntry",
    "SequenceReport",
    "PartialFractionResult",
    "classify_tail",
    "sequence_inner",
    "sequence_outer",
    "inner_theorem_bound",
    "outer_theorem_bound",
    "partial_fraction",
    "extrapolate",
]

DEFAULT_WINDOW = 3


@dataclass(frozen=True)
class Classification:
    kind: str  # "constant" | "arithmetic" | "undetermined"
    value: Fraction | None = None  # limit or common difference
    from_index: int | None = None  # first position of the observed pattern

    def as_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == "constant":
            out["limit"] = _num(self.value)
        elif self.kind == "arithmetic":
            out["difference"] = _num(self.value)
        if self.from_index is not None:
            out["from_index"] = self.from_index
        return out


def _num(x: Fraction | None):
    if x is None:
        return None
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class SequenceEntry:
    p: int
    s: int
    value: Fraction


@dataclass
class SequenceReport:
    entries: list[SequenceEntry]
    classification: Classification
    theorem_bound: int | None = None
    kind: str = ""
    params: dict = field(default_factory=dict)

    @property
    def values(self) -> list[Fraction]:
        return [e.value for e in self.entries]

    @property
    def from_p(self) -> int | None:
        i = self.classification.from_index
        return None if i is None else self.entries[i].p

    def as_dict(self) -> dict:
        cls = self.classification.as_dict()
        if self.from_p is not None:
            cls["from_p"] = self.from_p
        return {
            "entries": [{"p": e.p, "s": e.s, "value": _num(e.value)} for e in self.entries],
            "classification": cls,
            "theorem_bound": self.theorem_bound,
        }


def classify_tail(values: Sequence, window: int = DEFAULT_WINDOW) -> Classification:
    """Constant if the last `window` values agree, else arithmetic if the
    last `window` differences agree, else undetermined."""
    if window < 2:
        raise ValueError("window must be at least 2")
    vals = [Fraction(v) for v in values]
    if len(vals) < window + 1:
        raise ValueError(f"need at least {window + 1} values, got {len(vals)}")
    tail = vals[-window:]
    if all(v == tail[0] for v in tail):
        i = len(vals) - 1
        while i > 0 and vals[i - 1] == tail[0]:
            i -= 1
        return Classification("constant", tail[0], i)
    diffs = [b - a for a, b in zip(vals, vals[1:])]
    dtail = diffs[-window:]
    if all(d == dtail[0] for d in dtail):
        # diffs[j] = vals[j+1] - vals[j]; pattern starts at the value before the first equal diff
        j = len(diffs) - 1
        while j > 0 and diffs[j - 1] == dtail[0]:
            j -= 1
        return Classification("arithmetic", dtail[0], j)
    return Classification("undetermined")


def _pairing_with(F: GammaElement, target: tuple[int, ...]) -> Fraction:
    c, tau = straighten(target)
    if c == 0 or F.is_zero():
        return Fraction(0)
    return inner(F, q_lambda(tau)).constant() * c


def _q_of(comp: tuple[int, ...]) -> GammaElement:
    c, tau = straighten(comp)
    if c == 0:
        return GammaElement.zero()
    return q_lambda(tau).scale(c)


def _inner_entry(args) -> SequenceEntry:
    lam, mu, nu, p = args
    s = sum(lam) * (sum(mu) + p) - sum(nu)
    F = pleth(q_lambda(lam), _q_of(prepend(p, mu)))
    return SequenceEntry(p, s, _pairing_with(F, prepend(s, nu)))


def _outer_entry(args) -> SequenceEntry:
    lam, mu, nu, p = args
    s = (sum(lam) + p) * sum(mu) - sum(nu)
    F = pleth(_q_of(prepend(p, lam)), q_lambda(mu))
    return SequenceEntry(p, s, _pairing_with(F, prepend(s, nu)))


def _check(lam, mu, nu, p_min, p_max):
    for name, part in (("lambda", lam), ("mu", mu), ("nu", nu)):
        if not is_strict(part):
            raise ValueError(f"{name} must be a strict partition, got {tuple(part)}")
    if p_min > p_max:
        raise ValueError(f"empty p range {p_min}..{p_max}")


def _run(fn, jobs_args, jobs: int) -> list[SequenceEntry]:
    if jobs > 1 and len(jobs_args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, jobs_args))
    return [fn(a) for a in jobs_args]


def inner_theorem_bound(lam, mu, nu) -> int | None:
    """First p beyond which the inner sequence sits in its single-pole tail."""
    L, M, N = sum(lam), sum(mu), sum(nu)
    if L == 0:
        return None
    r = N // L - M
    mu1 = mu[0] if mu else 0
    degree = L * (mu1 + r)
    # smallest p with L (M + p) - N > degree
    return (degree + N) // L - M + 1


def outer_theorem_bound(lam, mu, nu) -> int | None:
    """First p past the polynomial part of the outer generating series."""
    L, M, N = sum(lam), sum(mu), sum(nu)
    if not mu:
        return None
    mu1 = mu[0]
    if len(mu) > 1:
        degree = Fraction(N * mu1, M - mu1)
    else:
        lam1 = lam[0] if lam else 0
        degree = Fraction((lam1 + N) * mu1)
    return int((degree + N) // M) - L + 1


def sequence_inner(lam, mu, nu, p_min: int, p_max: int, window: int = DEFAULT_WINDOW, jobs: int = 1) -> SequenceReport:
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    _check(lam, mu, nu, p_min, p_max)
    entries = _run(_inner_entry, [(lam, mu, nu, p) for p in range(p_min, p_max + 1)], jobs)
    cls = _classify_or_undetermined(entries, window)
    return SequenceReport(entries, cls, inner_theorem_bound(lam, mu, nu), "inner", {"lambda": lam, "mu": mu, "nu": nu})


def sequence_outer(lam, mu, nu, p_min: int, p_max: int, window: int = DEFAULT_WINDOW, jobs: int = 1) -> SequenceReport:
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    _check(lam, mu, nu, p_min, p_max)
    entries = _run(_outer_entry, [(lam, mu, nu, p) for p in range(p_min, p_max + 1)], jobs)
    cls = _classify_or_undetermined(entries, window)
    return SequenceReport(entries, cls, outer_theorem_bound(lam, mu, nu), "outer", {"lambda": lam, "mu": mu, "nu": nu})


def _classify_or_undetermined(entries, window) -> Classification:
    if len(entries) < window + 1:
        return Classification("undetermined")
    return classify_tail([e.value for e in entries], window)


def extrapolate(cls: Classification, last: Fraction, count: int) -> list[Fraction]:
    """Continue a classified tail by `count` further values."""
    if cls.kind == "constant":
        return [cls.value] * count
    if cls.kind == "arithmetic":
        return [last + cls.value * (i + 1) for i in range(count)]
    raise ValueError("cannot extrapolate an undetermined tail")


# --- Laurent partial fractions ------------------------------------------


@dataclass(frozen=True)
class PartialFractionResult:
    """H(Z) / (1 - Z)^n = laurent_part + sum_i pole_coefficients[i-1] / (1 - Z)^i."""

    laurent_part: LaurentScalar
    pole_coefficients: tuple[Fraction, ...]

    def reconstruct(self, n: int) -> LaurentScalar:
        """L (1-Z)^n + sum c_i (1-Z)^{n-i}, which must equal H (n >= 0)."""
        if n < 0:
            raise ValueError("reconstruction is a polynomial identity only for n >= 0")
        one_minus = LaurentScalar({0: 1, 1: -1})
        out = self.laurent_part * one_minus**n
        for i, c in enumerate(self.pole_coefficients, start=1):
            out = out + one_minus ** (n - i) * c
        return out


def _one_pole(H: LaurentScalar) -> tuple[LaurentScalar, Fraction]:
    # H/(1-Z) = L + c/(1-Z), one monomial at a time
    L: dict[int, Fraction] = {}
    c = Fraction(0)
    for k, b in H.items():
        c += b
        if k > 0:
            for e in range(k):
                L[e] = L.get(e, 0) - b
        elif k < 0:
            for e in range(k, 0):
                L[e] = L.get(e, 0) + b
    return LaurentScalar(L), c


def partial_fraction(H: LaurentScalar, n: int) -> PartialFractionResult:
    if n <= 0:
        return PartialFractionResult(H * LaurentScalar({0: 1, 1: -1}) ** (-n), ())
    L, c = _one_pole(H)
    poles = [c]
    for _ in range(n - 1):
        L, c0 = _one_pole(L)
        poles.insert(0, c0)
    return PartialFractionResult(L, tuple(poles))
