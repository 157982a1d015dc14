"""Independent reference computations used to freeze expected values.

None of these go through the facet description used by the library: hull
membership is decided with Carathéodory (barycentric coordinates in every
vertex simplex), and planar interiors with an ordered hull.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction


def _solve(A, b):
    n = len(A)
    M = [[Fraction(x) for x in r] + [Fraction(y)] for r, y in zip(A, b)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return None
        M[c], M[p] = M[p], M[c]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c] / M[c][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [M[r][n] / M[r][r] for r in range(n)]


def in_hull(point, verts):
    d = len(point)
    if len(set(verts)) == 1:
        return tuple(point) == tuple(verts[0])
    if d == 1:
        xs = [v[0] for v in verts]
        return min(xs) <= point[0] <= max(xs)
    for simplex in itertools.combinations(verts, d + 1):
        base = simplex[0]
        A = [[s[j] - base[j] for s in simplex[1:]] for j in range(d)]
        lam = _solve(A, [point[j] - base[j] for j in range(d)])
        if lam is None:
            continue
        if all(x >= 0 for x in lam) and sum(lam) <= 1:
            return True
    return False


def hull_2d(verts):
    pts = sorted(set(tuple(Fraction(x) for x in v) for v in verts))

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def in_interior_2d(point, verts):
    h = hull_2d(verts)
    n = len(h)
    for i in range(n):
        o, a = h[i], h[(i + 1) % n]
        c = (a[0] - o[0]) * (point[1] - o[1]) - (a[1] - o[1]) * (point[0] - o[0])
        if c <= 0:
            return False
    return True


def _box(verts):
    d = len(verts[0])
    return [
        range(math.ceil(min(v[j] for v in verts)), math.floor(max(v[j] for v in verts)) + 1)
        for j in range(d)
    ]


def dilate_translate(verts, v, t):
    return [tuple(t * Fraction(a) + Fraction(b) for a, b in zip(p, v)) for p in verts]


def count(verts, v, t):
    """#((t conv(verts) + v) ∩ Z^d) by Carathéodory membership."""
    W = dilate_translate(verts, v, t)
    return sum(1 for x in itertools.product(*_box(W)) if in_hull(x, W))


def count_interior_2d(verts, v, t):
    W = dilate_translate(verts, v, t)
    return sum(1 for x in itertools.product(*_box(W)) if in_interior_2d(x, W))


def count_interior_1d(verts, v, t):
    W = dilate_translate(verts, v, t)
    lo, hi = min(p[0] for p in W), max(p[0] for p in W)
    return sum(1 for x in range(math.floor(lo), math.ceil(hi) + 1) if lo < x < hi)


def shoelace(verts):
    h = hull_2d(verts)
    n = len(h)
    s = sum(h[i][0] * h[(i + 1) % n][1] - h[(i + 1) % n][0] * h[i][1] for i in range(n))
    return abs(Fraction(s)) / 2


def lagrange_eval(points, t):
    """Evaluate the interpolant through ``points`` at t (Lagrange form)."""
    total = Fraction(0)
    for i, (xi, yi) in enumerate(points):
        term = Fraction(yi)
        for j, (xj, _) in enumerate(points):
            if i != j:
                term *= Fraction(t - xj, xi - xj)
        total += term
    return total


def lagrange_coeffs(points):
    """Ascending coefficients of the interpolant, via solving the Vandermonde system."""
    n = len(points)
    A = [[Fraction(x) ** k for k in range(n)] for x, _ in points]
    sol = _solve(A, [y for _, y in points])
    while sol and sol[-1] == 0:
        sol.pop()
    return sol
