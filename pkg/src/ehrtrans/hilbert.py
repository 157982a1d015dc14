"""Hilbert series of the graded modules whose Hilbert function is TL_{P,v}.

The series sum_t TL_{P,v}(t) z^t equals Q(z) / (1 - z^q)^{d+1} with Q a
polynomial of degree < q(d+1).  Everything is computed from lattice counts.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import exact
from .counting import count, count_interior
from .polytope import Polytope
from .quasipoly import Polynomial
from .theorems import Report


class NonterminatingNumerator(ArithmeticError):
    pass


class NotLatticePolytope(ValueError):
    pass


@dataclass(frozen=True)
class HilbertSeriesData:
    d: int
    q: int
    alpha: int
    numerator: tuple[int, ...]

    def series(self, n: int) -> list[int]:
        """First n coefficients of z^alpha Q(z) / (1 - z^q)^{d+1}."""
        out = [0] * n
        # 1/(1-z^q)^{d+1} = sum_j C(j+d, d) z^{qj}
        for i, c in enumerate(self.numerator):
            if c == 0:
                continue
            j = 0
            while self.alpha + i + self.q * j < n:
                out[self.alpha + i + self.q * j] += c * math.comb(j + self.d, self.d)
                j += 1
        return out

    def h_vector(self) -> tuple[int, ...]:
        return tuple(self.numerator[: self.q * (self.d + 1)]) + (0,) * max(0, self.q * (self.d + 1) - len(self.numerator))

    def to_document(self) -> dict:
        return {"d": self.d, "q": self.q, "alpha": self.alpha, "numerator": list(self.numerator)}


def _numerator(seq: Sequence[int], q: int, d: int, bound: int | None = None) -> tuple[int, ...]:
    """Multiply a truncated series by (1 - z^q)^{d+1}; terms of degree >= bound must vanish."""
    n = len(seq)
    factor = [0] * (q * (d + 1) + 1)
    for j in range(d + 2):
        factor[q * j] = (-1) ** j * math.comb(d + 1, j)
    prod = [0] * n
    for i, a in enumerate(seq):
        if a == 0:
            continue
        for j, b in enumerate(factor):
            if b and i + j < n:
                prod[i + j] += a * b
    if bound is None:
        bound = q * (d + 1)
    if any(prod[bound:]):
        raise NonterminatingNumerator(f"numerator has terms beyond degree {bound - 1}: {prod[bound:]}")
    num = prod[:bound]
    while num and num[-1] == 0:
        num.pop()
    return tuple(num)


def _length(P: Polytope) -> int:
    q, d = P.denominator, P.dim
    return q * (d + 1) + 2 * q


def hilbert_numerator(P: Polytope, v: Sequence) -> HilbertSeriesData:
    v = exact.as_ratvector(v)
    q, d = P.denominator, P.dim
    seq = [count(P, v, t) for t in range(_length(P))]
    return HilbertSeriesData(d, q, 0, _numerator(seq, q, d))


def interior_numerator(P: Polytope, v: Sequence) -> HilbertSeriesData:
    v = exact.as_ratvector(v)
    q, d = P.denominator, P.dim
    seq = [0] + [count_interior(P, v, t) for t in range(1, _length(P))]
    # the interior numerator may reach degree q(d+1)
    return HilbertSeriesData(d, q, 0, _numerator(seq, q, d, q * (d + 1) + 1))


def reversed_numerator(data: HilbertSeriesData) -> tuple[int, ...]:
    """z^{q(d+1)} Q(1/z), the numerator predicted for the interior series at -v."""
    top = data.q * (data.d + 1)
    out = [0] * (top + 1)
    for i, c in enumerate(data.numerator):
        out[top - i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def check_hilbert_reciprocity(P: Polytope, v: Sequence) -> Report:
    """Interior series at v against (-1)^{d+1} times the closed series at -v in 1/z."""
    v = exact.as_ratvector(v)
    rep = Report("hilbert-reciprocity")
    closed = hilbert_numerator(P, tuple(-x for x in v))
    inner = interior_numerator(P, v)
    expected = reversed_numerator(closed)
    rep.add(inner.numerator == expected, v=",".join(map(exact.format_rational, v)),
            interior=list(inner.numerator), predicted=list(expected))
    return rep


def h_vector_constraints(P: Polytope, v: Sequence) -> Report:
    if P.denominator != 1:
        raise NotLatticePolytope("h-vector constraints need a lattice polytope")
    v = exact.as_ratvector(v)
    data = hilbert_numerator(P, v)
    h = data.h_vector()
    rep = Report("h-vector")
    rep.add(h[0] == (1 if exact.is_integral(v) else 0), rule="h0", h=list(h))
    rep.add(sum(h) == math.factorial(P.dim) * P.volume, rule="sum", h=list(h))
    rep.add(all(x >= 0 for x in h), rule="nonnegative", h=list(h))
    return rep


def enumerate_admissible_h(volume, d: int, v_integral: bool | None = None) -> list[tuple[int, ...]]:
    """Nonnegative (h_0..h_d) with the h_0 rule and sum d!*volume.

    ``v_integral=None`` merges both cases.
    """
    total = math.factorial(d) * Fraction(volume)
    if total.denominator != 1:
        raise ValueError("d! * volume must be an integer")
    total = int(total)
    starts = {True: [1], False: [0], None: [1, 0]}[v_integral]
    out = []
    for h0 in starts:
        for rest in itertools.product(range(total + 1), repeat=d):
            if h0 + sum(rest) == total:
                out.append((h0,) + rest)
    return sorted(out, reverse=True)


def h_to_polynomial(h: Sequence[int], d: int) -> Polynomial:
    """f(t) = sum_j h_j C(t + d - j, d), the Hilbert polynomial of a lattice numerator."""
    out = Polynomial()
    for j, c in enumerate(h):
        # C(t + d - j, d) = prod_{i=1..d} (t + d - j - i + 1) / i
        p = Polynomial([1])
        for i in range(1, d + 1):
            p = p * Polynomial([Fraction(d - j - i + 1, i), Fraction(1, i)])
        out = out + p * c
    return out
