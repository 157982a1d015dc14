"""Brute-force lattice point counts in dilated, translated polytopes.

Everything here works on integers: with ``D`` a common denominator of the
translation ``v``, the facet inequality ``(a, x) >= t*b + (a, v)`` becomes
``D*(a, x) >= D*t*b + (a, D*v)``.  The first ``d-1`` coordinates range over
the integer bounding box and the last one is solved for as an interval.
"""
from __future__ import annotations

import itertools
from typing import Sequence

from . import exact
from .exact import dot
from .polytope import Facet, Polytope

PLUS = "+"
MINUS = "-"


def _count(P: Polytope, v: Sequence, t: int, strict: Sequence[bool]) -> int:
    d = P.dim
    v = exact.as_ratvector(v)
    if len(v) != d:
        raise ValueError(f"translation has length {len(v)}, expected {d}")
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    D = exact.common_denominator(v)
    vn = [int(x * D) for x in v]
    A = P.normals
    rhs = [D * t * b + dot(a, vn) + (1 if s else 0) for a, b, s in zip(A, P.offsets, strict)]
    Da = [[D * x for x in a] for a in A]

    ranges = []
    for j in range(d - 1):
        lo = min(t * vert[j] for vert in P.vertices) + v[j]
        hi = max(t * vert[j] for vert in P.vertices) + v[j]
        ranges.append(range(exact.rational_ceil(lo), exact.rational_floor(hi) + 1))

    last = d - 1
    total = 0
    for head in itertools.product(*ranges):
        lo, hi = None, None
        ok = True
        for a, r in zip(Da, rhs):
            s = r - sum(x * y for x, y in zip(a, head))
            c = a[last]
            if c > 0:
                b = -((-s) // c)
                lo = b if lo is None or b > lo else lo
            elif c < 0:
                # c*x >= s with c < 0  <=>  x <= floor(s / c)
                b = s // c
                hi = b if hi is None or b < hi else hi
            elif s > 0:
                ok = False
                break
        if not ok:
            continue
        if lo is None or hi is None:
            raise AssertionError("unbounded fibre: polytope is not bounded")
        if hi >= lo:
            total += hi - lo + 1
    return total


def count(P: Polytope, v: Sequence, t: int) -> int:
    """#((tP + v) ∩ Z^d)."""
    return _count(P, v, t, [False] * len(P.inequalities))


def count_interior(P: Polytope, v: Sequence, t: int) -> int:
    """#((int(tP) + v) ∩ Z^d), for t >= 1."""
    if t < 1:
        raise ValueError("interior counts need t >= 1")
    return _count(P, v, t, [True] * len(P.inequalities))


def partial_boundary_facets(P: Polytope, i: int, sign: str) -> list[int]:
    """Facets making up the lower (sign '-') or upper (sign '+') boundary in direction e_i."""
    if not 1 <= i <= P.dim:
        raise ValueError(f"coordinate {i} out of range 1..{P.dim}")
    if sign not in (PLUS, MINUS):
        raise ValueError("sign must be '+' or '-'")
    j = i - 1
    if sign == MINUS:
        return [k for k, a in enumerate(P.normals) if a[j] > 0]
    return [k for k, a in enumerate(P.normals) if a[j] < 0]


def count_partial_boundary(P: Polytope, v: Sequence, t: int, i: int, sign: str) -> int:
    """Lattice points of tP + v lying on a facet of the lower/upper e_i-boundary."""
    chosen = set(partial_boundary_facets(P, i, sign))
    strict = [k in chosen for k in range(len(P.inequalities))]
    return count(P, v, t) - _count(P, v, t, strict)


def count_facet(P: Polytope, F: Facet | int, v: Sequence, t: int) -> int:
    """Lattice points of tF + v."""
    idx = F.index if isinstance(F, Facet) else int(F)
    strict = [k == idx for k in range(len(P.inequalities))]
    return count(P, v, t) - _count(P, v, t, strict)


def boundary_count(P: Polytope, v: Sequence, t: int) -> int:
    """Lattice points of tP + v lying on at least one facet."""
    return count(P, v, t) - count_interior(P, v, t)
