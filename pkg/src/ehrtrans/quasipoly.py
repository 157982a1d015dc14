"""Polynomials and quasi-polynomials with exact rational coefficients."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .exact import format_rational, parse_rational


class ValidationFailed(ArithmeticError):
    """Samples are not a quasi-polynomial of the requested period and degree."""


@dataclass(frozen=True)
class Polynomial:
    """Coefficients in ascending degree, with no trailing zeros."""

    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Polynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial(c * other for c in self.coeffs)
        out = [Fraction(0)] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def compose_scale(self, s) -> "Polynomial":
        """t -> p(s*t)."""
        s = Fraction(s)
        return Polynomial(c * s**i for i, c in enumerate(self.coeffs))

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def is_odd(self) -> bool:
        return all(c == 0 for c in self.coeffs[0::2])

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = format_rational(a)
            else:
                mono = "t" if i == 1 else f"t^{i}"
                body = mono if a == 1 else f"{format_rational(a)}{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def interpolate(points: Sequence[tuple[int, Fraction]]) -> Polynomial:
    """Exact interpolating polynomial through ``points`` (Newton form)."""
    xs = [Fraction(x) for x, _ in points]
    table = [Fraction(y) for _, y in points]
    n = len(xs)
    coef = [table[0]]
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(n - level)]
        coef.append(table[0])
    poly = Polynomial([coef[-1]])
    for k in range(n - 2, -1, -1):
        poly = poly * Polynomial([-xs[k], 1]) + Polynomial([coef[k]])
    return poly


@dataclass(frozen=True, eq=False)
class QuasiPolynomial:
    """``f(t) = constituents[t mod period](t)`` for every integer t."""

    period: int
    constituents: tuple[Polynomial, ...]

    def __post_init__(self):
        if self.period < 1 or len(self.constituents) != self.period:
            raise ValueError("period must be positive and match the number of constituents")

    @classmethod
    def polynomial(cls, p: Polynomial | Sequence) -> "QuasiPolynomial":
        if not isinstance(p, Polynomial):
            p = Polynomial(p)
        return cls(1, (p,))

    @classmethod
    def from_lists(cls, lists: Sequence[Sequence]) -> "QuasiPolynomial":
        return cls(len(lists), tuple(Polynomial(c) for c in lists))

    def constituent(self, k: int) -> Polynomial:
        return self.constituents[k % self.period]

    def __call__(self, t: int) -> Fraction:
        return self.constituent(t)(t)

    def with_period(self, q: int) -> "QuasiPolynomial":
        """Same function written with period q (a multiple of the current one)."""
        if q % self.period:
            raise ValueError(f"{q} is not a multiple of the period {self.period}")
        return QuasiPolynomial(q, tuple(self.constituent(k) for k in range(q)))

    def minimal_period(self) -> int:
        return minimal_period(self)

    def minimize(self) -> "QuasiPolynomial":
        p = minimal_period(self)
        return QuasiPolynomial(p, self.constituents[:p])

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuasiPolynomial):
            return NotImplemented
        q = math.lcm(self.period, other.period)
        return all(self.constituent(k) == other.constituent(k) for k in range(q))

    def __hash__(self) -> int:
        return hash(self.minimize().constituents)

    def __repr__(self) -> str:
        inner = ", ".join(str(p) for p in self.constituents)
        return f"QuasiPolynomial(period={self.period}, [{inner}])"

    def residue_classes(self) -> list[tuple[Polynomial, list[int]]]:
        """Group residues by constituent, ordered by smallest residue."""
        groups: dict[Polynomial, list[int]] = {}
        for k, p in enumerate(self.constituents):
            groups.setdefault(p, []).append(k)
        return sorted(groups.items(), key=lambda item: item[1][0])

    def to_document(self) -> dict:
        return {"period": self.period, "constituents": [p.to_strings() for p in self.constituents]}

    @classmethod
    def from_document(cls, doc: dict) -> "QuasiPolynomial":
        cons = tuple(Polynomial(parse_rational(str(c)) for c in cs) for cs in doc["constituents"])
        return cls(int(doc["period"]), cons)


def fit(samples: Callable[[int], object] | Sequence, period: int, degree: int, start: int = 0) -> QuasiPolynomial:
    """Fit a quasi-polynomial of the given period and degree bound.

    For each residue class, ``degree + 1`` samples are interpolated and two
    further samples of the same class are used for validation.  ``samples``
    is either a callable ``t -> value`` or a sequence indexed by t; only
    ``t >= start`` is used.
    """
    get = samples if callable(samples) else samples.__getitem__
    cons = []
    for k in range(period):
        t0 = k
        while t0 < start:
            t0 += period
        ts = [t0 + j * period for j in range(degree + 3)]
        vals = [Fraction(get(t)) for t in ts]
        p = interpolate(list(zip(ts[: degree + 1], vals[: degree + 1])))
        for t, y in zip(ts[degree + 1 :], vals[degree + 1 :]):
            if p(t) != y:
                raise ValidationFailed(
                    f"residue {k} mod {period}: sample at t={t} is {y}, fitted value {p(t)}"
                )
        cons.append(p)
    return QuasiPolynomial(period, tuple(cons))


def samples_needed(period: int, degree: int, start: int = 0) -> int:
    """Largest t requested by :func:`fit` with these parameters."""
    return max(start, 0) + period * (degree + 3)


def constituent(f: QuasiPolynomial, k: int) -> Polynomial:
    return f.constituent(k)


def is_symmetric(f: QuasiPolynomial) -> bool:
    return all(f.constituent(k) == f.constituent(-k) for k in range(f.period))


def minimal_period(f: QuasiPolynomial) -> int:
    q = f.period
    for p in range(1, q + 1):
        if q % p == 0 and all(f.constituents[k] == f.constituents[k % p] for k in range(q)):
            return p
    return q


def has_gcd_property(f: QuasiPolynomial) -> bool:
    g = f.minimize()
    q = g.period
    by_gcd: dict[int, Polynomial] = {}
    for k in range(q):
        key = math.gcd(k, q)
        if by_gcd.setdefault(key, g.constituents[k]) != g.constituents[k]:
            return False
    return True


def reciprocity_transform(f: QuasiPolynomial, d: int) -> QuasiPolynomial:
    """g_k(t) = (-1)^d f_{-k}(-t)."""
    sign = -1 if d % 2 else 1
    cons = tuple(f.constituent(-k).compose_scale(-1) * sign for k in range(f.period))
    return QuasiPolynomial(f.period, cons)


def rescale_argument(f: QuasiPolynomial, s: int) -> QuasiPolynomial:
    """The quasi-polynomial t -> f(s*t)."""
    if s == 0:
        raise ValueError("scale factor must be nonzero")
    q = f.period // math.gcd(f.period, s)
    return QuasiPolynomial(q, tuple(f.constituent(s * j).compose_scale(s) for j in range(q)))


def format_congruence(f: QuasiPolynomial) -> list[str]:
    """Lines like ``3/2t^2 - 1/2t  (t ≡ 1,3,6 (mod 100))``."""
    lines = []
    for p, ks in f.residue_classes():
        lines.append(f"{p}  (t ≡ {','.join(map(str, ks))} (mod {f.period}))")
    return lines
