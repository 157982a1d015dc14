"""Translated lattice point enumerators and Ehrhart quasi-polynomials of P + v."""
from __future__ import annotations

import math
from typing import Sequence

from . import exact
from .cells import DELTA, CellKey, CellTable, delta_key, enumerate_cells, reduce_mod_integers
from .counting import count, count_interior
from .polytope import Polytope
from .quasipoly import Polynomial, QuasiPolynomial, ValidationFailed, fit


class CrossValidationFailed(ValidationFailed):
    pass


def tl(P: Polytope, v: Sequence) -> QuasiPolynomial:
    """TL_{P,v}(t) = #((tP + v) ∩ Z^d), fitted with period denominator(P)."""
    v = exact.as_ratvector(v)
    return fit(lambda t: count(P, v, t), P.denominator, P.dim)


def tl_interior(P: Polytope, v: Sequence) -> QuasiPolynomial:
    """t -> #((int(tP) + v) ∩ Z^d), fitted on t >= 1."""
    v = exact.as_ratvector(v)
    return fit(lambda t: count_interior(P, v, t), P.denominator, P.dim, start=1)


def tl_cell(table: CellTable, key: CellKey) -> QuasiPolynomial:
    return table.tl_cell(key)


def ehr_translated(P: Polytope, v: Sequence, table: CellTable | None = None, minimize: bool = False) -> QuasiPolynomial:
    """ehr_{P+v}(t) = #(t(P + v) ∩ Z^d).

    The k-th constituent is the k-th constituent of TL_{P,kv}, which only
    depends on the cell of kv.  The result is checked against direct counts
    for t = 0..2Q.
    """
    v = exact.as_ratvector(v)
    if table is None:
        table = CellTable(P)
    Q = math.lcm(P.denominator, exact.common_denominator(v))
    cons = []
    for k in range(Q):
        f = table.tl_at(reduce_mod_integers(tuple(k * x for x in v)))
        cons.append(f.constituent(k))
    result = QuasiPolynomial(Q, tuple(cons))
    for t in range(2 * Q + 1):
        direct = count(P, tuple(t * x for x in v), t)
        if result(t) != direct:
            raise CrossValidationFailed(f"ehr at t={t}: assembled {result(t)}, counted {direct}")
    return result.minimize() if minimize else result


def constituent_universe(P: Polytope) -> set[Polynomial]:
    """Every polynomial that occurs as a constituent of some ehr_{P+v}."""
    table = CellTable(P, "exhaustive")
    out: set[Polynomial] = set()
    for cell in enumerate_cells(P, DELTA):
        f = table.tl_cell(cell.key)
        out.update(f.constituents)
    return out


def tl_table(P: Polytope) -> list[tuple[object, QuasiPolynomial]]:
    """(cell, TL_{P,C}) for every cell of the torus decomposition."""
    table = CellTable(P, "exhaustive")
    return [(cell, table.tl_cell(cell.key)) for cell in enumerate_cells(P, DELTA)]


def same_cell(P: Polytope, u: Sequence, v: Sequence) -> bool:
    return delta_key(P, u) == delta_key(P, v)
