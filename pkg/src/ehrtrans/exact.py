"""Exact rational and integer-lattice arithmetic.

Rationals are :class:`fractions.Fraction`.  Integer vectors are tuples of
Python ints.  Lattices are kept in row Hermite normal form so that coset
representatives are canonical.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
IntVector = tuple[int, ...]
RatVector = tuple[Fraction, ...]


def rational_ceil(x) -> int:
    x = Fraction(x)
    return -((-x.numerator) // x.denominator)


def rational_floor(x) -> int:
    x = Fraction(x)
    return x.numerator // x.denominator


def vector_gcd(v: Iterable[int]) -> int:
    g = 0
    for a in v:
        g = math.gcd(g, a)
    return g


def primitive(v: Sequence[int]) -> IntVector:
    """Divide an integer vector by the gcd of its entries, keeping its direction."""
    g = vector_gcd(v)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(a // g for a in v)


def lcm_all(values: Iterable[int]) -> int:
    out = 1
    for a in values:
        out = math.lcm(out, a)
    return out


def common_denominator(v: Iterable[Fraction]) -> int:
    return lcm_all(Fraction(x).denominator for x in v)


def is_integral(v: Iterable[Fraction]) -> bool:
    return all(Fraction(x).denominator == 1 for x in v)


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def as_ratvector(v: Iterable) -> RatVector:
    return tuple(Fraction(x) for x in v)


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` (or a plain decimal) into a Fraction."""
    s = s.strip()
    if not s:
        raise ValueError("empty rational literal")
    return Fraction(s)


def parse_vector(s: str) -> RatVector:
    """Parse a comma separated vector literal like ``"17/100,52/100"``."""
    return tuple(parse_rational(part) for part in s.split(","))


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


@dataclass(frozen=True)
class IntegerLattice:
    """Sublattice of Z^n spanned by ``generators``, stored with its row HNF.

    ``rows`` is the HNF (nonzero rows only) and ``pivots`` the pivot column of
    each row.
    """

    ncols: int
    generators: tuple[IntVector, ...]
    rows: tuple[IntVector, ...]
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, c: Sequence[int]) -> IntVector:
        return canonical_coset_rep(c, self)

    def contains(self, c: Sequence[int]) -> bool:
        return all(x == 0 for x in canonical_coset_rep(c, self))


def hnf(rows: Iterable[Sequence[int]], ncols: int | None = None) -> IntegerLattice:
    """Row Hermite normal form of an integer matrix.

    Pivots are positive and entries above a pivot lie in ``[0, pivot)``.
    Zero rows are dropped; rank-deficient and empty inputs are allowed.
    """
    gens = tuple(tuple(int(a) for a in r) for r in rows)
    if ncols is None:
        if not gens:
            raise ValueError("ncols is required for an empty generator list")
        ncols = len(gens[0])
    if any(len(r) != ncols for r in gens):
        raise ValueError("generator length does not match ncols")
    work = [list(r) for r in gens]
    out: list[list[int]] = []
    pivots: list[int] = []
    col = 0
    while work and col < ncols:
        nz = [r for r in work if r[col] != 0]
        if not nz:
            col += 1
            continue
        zero = [r for r in work if r[col] == 0]
        # gcd-combine all rows with a nonzero entry in this column
        piv = nz[0]
        rest = []
        for r in nz[1:]:
            g, x, y = xgcd(piv[col], r[col])
            a, b = piv[col] // g, r[col] // g
            new_piv = [x * p + y * s for p, s in zip(piv, r)]
            killed = [b * p - a * s for p, s in zip(piv, r)]
            piv = new_piv
            rest.append(killed)
        if piv[col] < 0:
            piv = [-a for a in piv]
        for r in out:
            q = r[col] // piv[col]
            if q:
                for j in range(ncols):
                    r[j] -= q * piv[j]
        out.append(piv)
        pivots.append(col)
        work = [r for r in zero + rest if any(r)]
        col += 1
    return IntegerLattice(ncols, gens, tuple(tuple(r) for r in out), tuple(pivots))


def canonical_coset_rep(c: Sequence[int], lattice: IntegerLattice) -> IntVector:
    """Unique representative of ``c + lattice``.

    Pivot coordinates are reduced into ``[0, pivot)`` in HNF row order.
    """
    if len(c) != lattice.ncols:
        raise ValueError(
            f"vector of length {len(c)} does not match lattice dimension {lattice.ncols}"
        )
    out = [int(a) for a in c]
    for row, p in zip(lattice.rows, lattice.pivots):
        q = out[p] // row[p]
        if q:
            for j in range(p, lattice.ncols):
                out[j] -= q * row[j]
    return tuple(out)


def unimodular_completion(a: Sequence[int]) -> list[list[int]]:
    """Return a unimodular matrix U (list of rows) with ``a @ U = e_1``.

    ``a`` must be primitive.  The columns 2..d of U then form a basis of
    the lattice ``{x in Z^d : (a, x) = 0}``.
    """
    d = len(a)
    if vector_gcd(a) != 1:
        raise ValueError("vector is not primitive")
    row = [int(x) for x in a]
    U = [[int(i == j) for j in range(d)] for i in range(d)]

    def colop(i: int, j: int, p: int, q: int, r: int, s: int) -> None:
        # (col_i, col_j) <- (p*col_i + r*col_j, q*col_i + s*col_j)
        for M in (U,):
            for k in range(d):
                ci, cj = M[k][i], M[k][j]
                M[k][i], M[k][j] = p * ci + r * cj, q * ci + s * cj
        ri, rj = row[i], row[j]
        row[i], row[j] = p * ri + r * rj, q * ri + s * rj

    for j in range(1, d):
        if row[j] == 0:
            continue
        g, x, y = xgcd(row[0], row[j])
        a0, aj = row[0] // g, row[j] // g
        # det [[x, -aj], [y, a0]] = x*a0 + y*aj = 1
        colop(0, j, x, -aj, y, a0)
    if row[0] == -1:
        for k in range(d):
            U[k][0] = -U[k][0]
        row[0] = 1
    assert row[0] == 1 and all(r == 0 for r in row[1:])
    return U


def det(M: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-free Gaussian elimination."""
    n = len(M)
    A = [[Fraction(x) for x in r] for r in M]
    sign = 1
    out = Fraction(1)
    for i in range(n):
        p = next((r for r in range(i, n) if A[r][i] != 0), None)
        if p is None:
            return Fraction(0)
        if p != i:
            A[i], A[p] = A[p], A[i]
            sign = -sign
        out *= A[i][i]
        for r in range(i + 1, n):
            f = A[r][i] / A[i][i]
            if f:
                for c in range(i, n):
                    A[r][c] -= f * A[i][c]
    return sign * out


def rank(rows: Sequence[Sequence]) -> int:
    A = [[Fraction(x) for x in r] for r in rows]
    if not A:
        return 0
    ncols = len(A[0])
    rk = 0
    for c in range(ncols):
        p = next((r for r in range(rk, len(A)) if A[r][c] != 0), None)
        if p is None:
            continue
        A[rk], A[p] = A[p], A[rk]
        for r in range(len(A)):
            if r != rk and A[r][c] != 0:
                f = A[r][c] / A[rk][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[rk])]
        rk += 1
        if rk == len(A):
            break
    return rk


def solve(A: Sequence[Sequence], b: Sequence) -> RatVector | None:
    """Unique solution of a square nonsingular system, or None if singular."""
    n = len(A)
    M = [[Fraction(x) for x in r] + [Fraction(y)] for r, y in zip(A, b)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return None
        M[c], M[p] = M[p], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return tuple(M[r][n] for r in range(n))


def nullvector(rows: Sequence[Sequence]) -> RatVector | None:
    """A nonzero vector orthogonal to ``rows`` when they have corank exactly 1."""
    A = [[Fraction(x) for x in r] for r in rows]
    ncols = len(A[0])
    pivcols = []
    rk = 0
    for c in range(ncols):
        p = next((r for r in range(rk, len(A)) if A[r][c] != 0), None)
        if p is None:
            continue
        A[rk], A[p] = A[p], A[rk]
        inv = 1 / A[rk][c]
        A[rk] = [x * inv for x in A[rk]]
        for r in range(len(A)):
            if r != rk and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[rk])]
        pivcols.append(c)
        rk += 1
    free = [c for c in range(ncols) if c not in pivcols]
    if len(free) != 1:
        return None
    f = free[0]
    out = [Fraction(0)] * ncols
    out[f] = Fraction(1)
    for r, c in enumerate(pivcols):
        out[c] = -A[r][f]
    return tuple(out)


def integer_scale(v: Sequence[Fraction]) -> IntVector:
    """Smallest positive multiple of a rational vector that is primitive integral."""
    den = common_denominator(v)
    return primitive([int(Fraction(x) * den) for x in v])
