"""Exact feasibility of mixed linear systems by Fourier-Motzkin elimination.

A system is a list of constraints ``(a, b, op)`` meaning ``(a, x) op b`` with
``op`` one of ``"="``, ``">="``, ``">"``.  Strict inequalities are relaxed to
``(a, x) - b >= lam`` with a shared slack ``lam`` that is maximised (capped
at 1); the system is feasible iff that maximum is positive.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import exact

EQ, GE, GT = "=", ">=", ">"


@dataclass(frozen=True)
class Constraint:
    a: tuple[Fraction, ...]
    b: Fraction
    op: str

    @classmethod
    def make(cls, a, b, op) -> "Constraint":
        if op not in (EQ, GE, GT):
            raise ValueError(f"unknown relation {op!r}")
        return cls(tuple(Fraction(x) for x in a), Fraction(b), op)


def _eliminate_equalities(n: int, cons: list[Constraint]):
    """Solve the equalities for pivot variables.

    Returns ``(x0, basis, rank)`` with every solution ``x0 + basis @ y``, or
    None when inconsistent.
    """
    rows = [list(c.a) + [c.b] for c in cons if c.op == EQ]
    pivcols: list[int] = []
    r = 0
    for col in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivcols.append(col)
        r += 1
    for row in rows[r:]:
        if row[n] != 0:
            return None
    free = [c for c in range(n) if c not in pivcols]
    x0 = [Fraction(0)] * n
    for i, c in enumerate(pivcols):
        x0[c] = rows[i][n]
    basis = []  # one column per free variable
    for f in free:
        col = [Fraction(0)] * n
        col[f] = Fraction(1)
        for i, c in enumerate(pivcols):
            col[c] = -rows[i][f]
        basis.append(col)
    return x0, basis, len(pivcols)


def _fm_max_slack(k: int, ineqs: list[tuple[list[Fraction], Fraction]]):
    """Maximise the last variable subject to ``(c, z) >= rhs`` over k+1 unknowns.

    The last unknown is the slack, capped at 1.  Returns ``(lam, z)`` with a
    witness ``z`` (length k+1), or None if infeasible.
    """
    system = [(list(c), Fraction(rhs)) for c, rhs in ineqs]
    cap = [Fraction(0)] * k + [Fraction(-1)]
    system.append((cap, Fraction(-1)))
    stages = []
    for var in range(k):
        stages.append(system)
        pos = [s for s in system if s[0][var] > 0]
        neg = [s for s in system if s[0][var] < 0]
        out = {}
        for s in system:
            if s[0][var] == 0:
                out[_norm(s)] = s
        for p in pos:
            for q in neg:
                fp, fq = p[0][var], -q[0][var]
                c = [fq * x + fp * y for x, y in zip(p[0], q[0])]
                rhs = fq * p[1] + fp * q[1]
                s = (c, rhs)
                out[_norm(s)] = s
        system = list(out.values())
    # only the slack remains
    lo, hi = None, Fraction(1)
    for c, rhs in system:
        coef = c[k]
        if coef == 0:
            if rhs > 0:
                return None
        elif coef > 0:
            b = rhs / coef
            lo = b if lo is None or b > lo else lo
        else:
            b = rhs / coef
            hi = b if b < hi else hi
    if lo is not None and lo > hi:
        return None
    lam = hi
    z = [Fraction(0)] * (k + 1)
    z[k] = lam
    for var in range(k - 1, -1, -1):
        lo_v, hi_v = None, None
        for c, rhs in stages[var]:
            coef = c[var]
            if coef == 0:
                continue
            rest = rhs - sum(c[j] * z[j] for j in range(var + 1, k + 1))
            b = rest / coef
            if coef > 0:
                lo_v = b if lo_v is None or b > lo_v else lo_v
            else:
                hi_v = b if hi_v is None or b < hi_v else hi_v
        if lo_v is not None and hi_v is not None:
            z[var] = (lo_v + hi_v) / 2
        elif lo_v is not None:
            z[var] = lo_v
        elif hi_v is not None:
            z[var] = hi_v
    return lam, z


def _norm(s):
    c, rhs = s
    scale = next((abs(x) for x in c if x != 0), None)
    if scale is None:
        return (tuple(c), rhs)
    return (tuple(x / scale for x in c), rhs / scale)


@dataclass(frozen=True)
class Solution:
    point: tuple[Fraction, ...]
    slack: Fraction


def find_point(n: int, constraints: Sequence[Constraint]) -> Solution | None:
    """A point satisfying every constraint (strict ones with margin ``slack``)."""
    cons = list(constraints)
    sol = _eliminate_equalities(n, cons)
    if sol is None:
        return None
    x0, basis, _ = sol
    k = len(basis)
    ineqs = []
    for c in cons:
        if c.op == EQ:
            continue
        # (a, x0 + B y) - b [- lam] >= 0
        coeffs = [exact.dot(c.a, col) for col in basis]
        coeffs.append(Fraction(-1) if c.op == GT else Fraction(0))
        ineqs.append((coeffs, c.b - exact.dot(c.a, x0)))
    res = _fm_max_slack(k, ineqs)
    if res is None:
        return None
    lam, z = res
    has_strict = any(c.op == GT for c in cons)
    if has_strict and lam <= 0:
        return None
    if has_strict:
        # re-centre with half the optimal slack for a point away from the boundary
        res = _fm_max_slack(k, ineqs + [([Fraction(0)] * k + [Fraction(-1)], -lam / 2)])
        lam, z = res
    point = tuple(x + sum(col[i] * z[j] for j, col in enumerate(basis)) for i, x in enumerate(x0))
    return Solution(point, lam)


def is_feasible(n: int, constraints: Sequence[Constraint]) -> bool:
    return find_point(n, constraints) is not None


def relative_interior(n: int, constraints: Sequence[Constraint]):
    """Dimension and a relative-interior point of the set, or None if empty.

    Implicit equalities among the ``>=`` constraints are detected by asking
    whether each can be made strict.
    """
    cons = list(constraints)
    if find_point(n, cons) is None:
        return None
    changed = True
    while changed:
        changed = False
        for i, c in enumerate(cons):
            if c.op != GE:
                continue
            trial = cons[:i] + [Constraint(c.a, c.b, GT)] + cons[i + 1 :]
            if find_point(n, trial) is None:
                cons[i] = Constraint(c.a, c.b, EQ)
            else:
                cons[i] = Constraint(c.a, c.b, GT)
            changed = True
            break
    sol = find_point(n, cons)
    eq_rows = [list(c.a) for c in cons if c.op == EQ]
    dim = n - exact.rank(eq_rows) if eq_rows else n
    return dim, sol.point
