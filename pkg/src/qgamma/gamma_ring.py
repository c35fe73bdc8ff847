"""Sparse exact arithmetic in Gamma tensor Q[z, 1/z].

An element is a finite sum of terms c * z^e * p_mu where mu is a partition
(all parts odd for genuine elements of Gamma) and c a Fraction.  Terms are
kept in a flat dict keyed by (mu, e); no zero coefficients are stored.
"""

from __future__ import annotations

import threading
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Iterator, Mapping, Union

from .partitions import z_mu

Number = Union[int, Fraction]

__all__ = [
    "LaurentScalar",
    "GammaElement",
    "qgen",
    "pgen",
    "weight_component",
    "substitute_letter",
    "map_power_sums",
    "negate_alphabet",
    "scale_alphabet",
    "evaluate_letter",
]


class LaurentScalar:
    """Laurent polynomial in z with exact rational coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, Number] | Number | None = None):
        if coeffs is None:
            self._c: dict[int, Fraction] = {}
        elif isinstance(coeffs, (int, Fraction)):
            self._c = {0: Fraction(coeffs)} if coeffs else {}
        else:
            self._c = {int(e): Fraction(v) for e, v in coeffs.items() if v}

    @classmethod
    def monomial(cls, c: Number = 1, e: int = 0) -> "LaurentScalar":
        return cls({e: c})

    @classmethod
    def _raw(cls, d: dict[int, Fraction]) -> "LaurentScalar":
        out = cls.__new__(cls)
        out._c = d
        return out

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return iter(sorted(self._c.items()))

    def coefficient(self, e: int) -> Fraction:
        return self._c.get(e, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._c.get(0, Fraction(0))

    def degree(self) -> int | None:
        return max(self._c) if self._c else None

    def valuation(self) -> int | None:
        return min(self._c) if self._c else None

    def __bool__(self) -> bool:
        return bool(self._c)

    @staticmethod
    def _coerce(other) -> "LaurentScalar | None":
        if isinstance(other, LaurentScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentScalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = dict(self._c)
        for e, v in other._c.items():
            s = d.get(e, 0) + v
            if s:
                d[e] = s
            else:
                d.pop(e, None)
        return LaurentScalar._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d: dict[int, Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in o._c.items():
                e = e1 + e2
                d[e] = d.get(e, 0) + v1 * v2
        return LaurentScalar._raw({e: v for e, v in d.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        out = LaurentScalar(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in self.items():
            if e == 0:
                parts.append(str(v))
            else:
                parts.append(f"{v}*z^{e}" if v != 1 else f"z^{e}")
        return " + ".join(parts)


TermKey = tuple[tuple[int, ...], int]


@lru_cache(maxsize=1 << 18)
def _merge(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


class GammaElement:
    """Element of Gamma tensor Q[z, 1/z] in the power-sum basis.

    Treat instances as immutable; arithmetic always returns new objects.
    """

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[TermKey, Number] | Iterable[tuple[TermKey, Number]] | None = None):
        d: dict[TermKey, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (mu, e), c in items:
                if any(x <= 0 for x in mu):
                    raise ValueError(f"power-sum index must have positive parts, got {mu}")
                key = (tuple(sorted(mu, reverse=True)), int(e))
                s = d.get(key, 0) + Fraction(c)
                if s:
                    d[key] = s
                else:
                    d.pop(key, None)
        self._t = d

    @classmethod
    def _raw(cls, d: dict[TermKey, Fraction]) -> "GammaElement":
        out = cls.__new__(cls)
        out._t = d
        return out

    # constructors -----------------------------------------------------
    @classmethod
    def zero(cls) -> "GammaElement":
        return cls._raw({})

    @classmethod
    def one(cls) -> "GammaElement":
        return cls.constant(1)

    @classmethod
    def constant(cls, c: Number | LaurentScalar) -> "GammaElement":
        if isinstance(c, LaurentScalar):
            return cls._raw({((), e): v for e, v in c._c.items()})
        return cls._raw({((), 0): Fraction(c)} if c else {})

    @classmethod
    def letter(cls, c: Number = 1, e: int = 1) -> "GammaElement":
        """The scalar c*z^e, used as an alphabet of c copies of z^e in plethysm."""
        return cls._raw({((), e): Fraction(c)} if c else {})

    @classmethod
    def p(cls, *mu: int) -> "GammaElement":
        """Power-sum monomial p_mu."""
        return cls({(mu, 0): 1})

    # inspection -------------------------------------------------------
    def terms(self) -> Iterator[tuple[tuple[int, ...], int, Fraction]]:
        """(mu, z-exponent, coefficient) in deterministic order."""
        for (mu, e), c in sorted(self._t.items(), key=lambda kv: (_rl_key(kv[0][0]), kv[0][1])):
            yield mu, e, c

    def raw_items(self):
        return self._t.items()

    def __len__(self) -> int:
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_z_free(self) -> bool:
        return all(e == 0 for _, e in self._t)

    def is_gamma(self) -> bool:
        """True when every power-sum index has only odd parts."""
        return all(x % 2 for mu, _ in self._t for x in mu)

    def weights(self) -> set[int]:
        return {sum(mu) for mu, _ in self._t}

    def max_weight(self) -> int:
        return max((sum(mu) for mu, _ in self._t), default=0)

    def z_exponents(self) -> set[int]:
        return {e for _, e in self._t}

    def coefficient(self, mu: Iterable[int]) -> LaurentScalar:
        key = tuple(sorted(mu, reverse=True))
        return LaurentScalar({e: c for (m, e), c in self._t.items() if m == key})

    def z_coefficient(self, e: int) -> "GammaElement":
        """The z^e coefficient as a z-free element."""
        return GammaElement._raw({(mu, 0): c for (mu, f), c in self._t.items() if f == e})

    def constant_term(self) -> LaurentScalar:
        return self.coefficient(())

    def truncate_z(self, lo: int | None = None, hi: int | None = None) -> "GammaElement":
        return GammaElement._raw(
            {k: c for k, c in self._t.items() if (lo is None or k[1] >= lo) and (hi is None or k[1] <= hi)}
        )

    # arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "GammaElement | None":
        if isinstance(other, GammaElement):
            return other
        if isinstance(other, (int, Fraction, LaurentScalar)):
            return GammaElement.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = dict(self._t)
        for k, v in o._t.items():
            s = d.get(k, 0) + v
            if s:
                d[k] = s
            else:
                d.pop(k, None)
        return GammaElement._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return GammaElement._raw({k: -v for k, v in self._t.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Number | LaurentScalar) -> "GammaElement":
        if isinstance(c, LaurentScalar):
            return self * GammaElement.constant(c)
        c = Fraction(c)
        if not c:
            return GammaElement.zero()
        return GammaElement._raw({k: v * c for k, v in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._t, o._t
        if len(a) < len(b):
            a, b = b, a
        d: dict[TermKey, Fraction] = {}
        get = d.get
        for (m1, e1), c1 in b.items():
            for (m2, e2), c2 in a.items():
                k = (_merge(m1, m2), e1 + e2)
                d[k] = get(k, 0) + c1 * c2
        return GammaElement._raw({k: v for k, v in d.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "GammaElement":
        if n < 0:
            raise ValueError("negative power")
        out = GammaElement.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if not self._t:
            return "0"
        out = []
        for mu, e, c in self.terms():
            mono = "*".join(f"p{x}" for x in mu)
            if e:
                mono = f"z^{e}" + ("*" + mono if mono else "")
            out.append(f"{c}" + ("*" + mono if mono else ""))
        return " + ".join(out)


def _rl_key(mu: tuple[int, ...]):
    # reverse lexicographic: larger tuples first
    return tuple(-x for x in mu) + (1,)


def pgen(n: int) -> GammaElement:
    """The power sum p_n as an element (no oddness check)."""
    return GammaElement._raw({((n,), 0): Fraction(1)})


# q_n memo: concurrent readers are fine, concurrent insertion recomputes the
# same value so the race is benign; the lock only serialises growth.
_QGEN: list[GammaElement] = [GammaElement.one()]
_QGEN_LOCK = threading.Lock()


def qgen(n: int) -> GammaElement:
    """q_n in odd power sums via n q_n = 2 sum_{m odd} p_m q_{n-m}."""
    if n < 0:
        return GammaElement.zero()
    if n < len(_QGEN):
        return _QGEN[n]
    with _QGEN_LOCK:
        while len(_QGEN) <= n:
            k = len(_QGEN)
            d: dict[TermKey, Fraction] = {}
            for m in range(1, k + 1, 2):
                for (mu, _), c in _QGEN[k - m]._t.items():
                    key = (_merge((m,), mu), 0)
                    d[key] = d.get(key, 0) + c
            scale = Fraction(2, k)
            _QGEN.append(GammaElement._raw({key: c * scale for key, c in d.items() if c}))
    return _QGEN[n]


def qgen_closed_form(n: int) -> GammaElement:
    """q_n = sum over odd mu of 2^{l(mu)} / z_mu * p_mu (direct enumeration)."""
    from .partitions import odd_partitions

    if n < 0:
        return GammaElement.zero()
    return GammaElement._raw({(mu, 0): Fraction(2 ** len(mu), z_mu(mu)) for mu in odd_partitions(n)})


def seed_qgen(table: Mapping[int, GammaElement]) -> None:
    """Install precomputed q_n values (used by the persistent cache)."""
    with _QGEN_LOCK:
        n = len(_QGEN)
        while n in table:
            _QGEN.append(table[n])
            n += 1


def weight_component(F: GammaElement, w: int) -> GammaElement:
    if not F.is_z_free():
        raise ValueError("weight_component needs a z-free element")
    return GammaElement._raw({k: c for k, c in F._t.items() if sum(k[0]) == w})


def map_power_sums(F: GammaElement, image: Callable[[int], GammaElement]) -> GammaElement:
    """Apply the algebra map p_n -> image(n); z and constants are fixed."""
    powers: dict[tuple[int, int], GammaElement] = {}

    def power(n: int, k: int) -> GammaElement:
        key = (n, k)
        if key not in powers:
            powers[key] = image(n) ** k
        return powers[key]

    out: dict[TermKey, Fraction] = {}
    for (mu, e), c in F._t.items():
        term = GammaElement._raw({((), e): c})
        for n, k in Counter(mu).items():
            term = term * power(n, k)
        for key, v in term._t.items():
            s = out.get(key, 0) + v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return GammaElement._raw(out)


def substitute_letter(F: GammaElement, sign: int = 1, direction: int = 1) -> GammaElement:
    """F(A + sign * z^direction), i.e. p_n -> p_n + sign * z^(direction*n)."""
    if sign not in (1, -1) or direction not in (1, -1):
        raise ValueError("sign and direction must be +1 or -1")
    return map_power_sums(
        F, lambda n: GammaElement._raw({((n,), 0): Fraction(1), ((), direction * n): Fraction(sign)})
    )


def negate_alphabet(F: GammaElement) -> GammaElement:
    """F(-A): p_n -> -p_n."""
    return map_power_sums(F, lambda n: GammaElement._raw({((n,), 0): Fraction(-1)}))


def scale_alphabet(F: GammaElement) -> GammaElement:
    """F(zA): p_n -> z^n p_n."""
    return map_power_sums(F, lambda n: GammaElement._raw({((n,), n): Fraction(1)}))


def evaluate_letter(F: GammaElement, c: Number = 1, e: int = 1) -> GammaElement:
    """F evaluated on the alphabet of c copies of z^e: p_n -> c z^(e n)."""
    c = Fraction(c)
    return map_power_sums(F, lambda n: GammaElement._raw({((), e * n): c} if c else {}))
