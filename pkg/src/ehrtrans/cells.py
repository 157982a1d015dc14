"""Cells of the periodic arrangement {(a_i, x) = k : k in Z} on the torus.

A point ``v`` is described by ``c_i = ceil((a_i, v))`` and the flags
``eps_i = [(a_i, v) in Z]``.  The set of points sharing ``(c, eps)`` is
convex, hence a single open cell of the arrangement.  Integer translation
by ``w`` adds ``phi(w) = ((a_1, w), ..., (a_m, w))`` to ``c``, so reducing
``c`` modulo the lattice ``phi(Z^d)`` identifies cells on the torus.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import exact
from .exact import IntVector, RatVector, dot
from .feasibility import EQ, GE, GT, Constraint, find_point, relative_interior
from .polytope import Polytope

DELTA = "delta"
LAMBDA = "lambda"


class EnumerationLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class CellKey:
    """``c`` reduced modulo phi(Z^d); ``eps`` is None for upper-region keys."""

    c: IntVector
    eps: tuple[bool, ...] | None

    @property
    def kind(self) -> str:
        return LAMBDA if self.eps is None else DELTA

    def to_document(self) -> dict:
        doc = {"c": list(self.c)}
        if self.eps is not None:
            doc["eps"] = [int(e) for e in self.eps]
        return doc

    def label(self) -> str:
        cs = ",".join(map(str, self.c))
        if self.eps is None:
            return f"U({cs})"
        return f"C({cs}|{''.join('1' if e else '0' for e in self.eps)})"


@dataclass(frozen=True)
class Cell:
    key: CellKey
    representative: RatVector
    dimension: int


@lru_cache(maxsize=None)
def translation_lattice(P: Polytope) -> exact.IntegerLattice:
    """phi(Z^d) inside Z^m, generated by phi(e_1), ..., phi(e_d)."""
    A = P.normals
    gens = [[a[j] for a in A] for j in range(P.dim)]
    return exact.hnf(gens, ncols=len(A))


def phi(P: Polytope, v: Sequence) -> tuple[Fraction, ...]:
    v = exact.as_ratvector(v)
    return tuple(dot(a, v) for a in P.normals)


def raw_key(P: Polytope, v: Sequence) -> tuple[IntVector, tuple[bool, ...]]:
    vals = phi(P, v)
    return tuple(exact.rational_ceil(x) for x in vals), tuple(x.denominator == 1 for x in vals)


def canonical(P: Polytope, c: Sequence[int], eps=None) -> CellKey:
    return CellKey(exact.canonical_coset_rep(c, translation_lattice(P)), None if eps is None else tuple(eps))


def delta_key(P: Polytope, v: Sequence) -> CellKey:
    c, eps = raw_key(P, v)
    return canonical(P, c, eps)


def lambda_key(P: Polytope, v: Sequence) -> CellKey:
    c, _ = raw_key(P, v)
    return canonical(P, c)


def to_lambda(P: Polytope, key: CellKey) -> CellKey:
    return canonical(P, key.c)


def reduce_mod_integers(v: Sequence) -> RatVector:
    return tuple(x - exact.rational_floor(x) for x in exact.as_ratvector(v))


def _c_ranges(P: Polytope) -> list[range]:
    out = []
    for a in P.normals:
        lo = sum(x for x in a if x < 0)
        hi = sum(x for x in a if x > 0)
        out.append(range(lo, hi + 1))
    return out


def _box(d: int) -> list[Constraint]:
    cons = []
    for j in range(d):
        e = [0] * d
        e[j] = 1
        cons.append(Constraint.make(e, 0, GE))
        cons.append(Constraint.make([-x for x in e], -1, GE))
    return cons


def _delta_options(a: IntVector, c: int) -> list[tuple[bool, list[Constraint]]]:
    neg = [-x for x in a]
    return [
        (True, [Constraint.make(a, c, EQ)]),
        (False, [Constraint.make(a, c - 1, GT), Constraint.make(neg, -c, GT)]),
    ]


def _lambda_constraints(a: IntVector, c: int) -> list[Constraint]:
    return [Constraint.make(a, c - 1, GT), Constraint.make([-x for x in a], -c, GE)]


def enumerate_cells(P: Polytope, kind: str = DELTA, max_nodes: int = 500_000) -> list[Cell]:
    """All cells of the torus decomposition (``delta``) or its upper regions (``lambda``).

    Candidate keys are scanned facet by facet with ``c_i`` in the range of
    ``ceil((a_i, x))`` over the unit cube; partial systems intersected with the
    cube are pruned by exact feasibility.
    """
    return list(_enumerate_cached(P, kind, max_nodes))


@lru_cache(maxsize=64)
def _enumerate_cached(P: Polytope, kind: str, max_nodes: int) -> tuple[Cell, ...]:
    if kind not in (DELTA, LAMBDA):
        raise ValueError(f"unknown cell kind {kind!r}")
    d = P.dim
    A = P.normals
    ranges = _c_ranges(P)
    box = _box(d)
    found: dict[CellKey, Cell] = {}
    nodes = 0

    def leaf(c: list[int], eps: list[bool] | None, region: list[Constraint]) -> None:
        if kind == DELTA:
            sol = find_point(d, box + region)
            eq_rows = [A[i] for i, e in enumerate(eps) if e]
            dim = d - exact.rank(eq_rows) if eq_rows else d
            point = sol.point
        else:
            res = relative_interior(d, region)
            dim, point = res
        rep = reduce_mod_integers(point)
        key = canonical(P, c, eps)
        check = delta_key(P, rep) if kind == DELTA else lambda_key(P, rep)
        assert check == key, (check, key, c, point)
        if key not in found:
            found[key] = Cell(key, rep, dim)

    def walk(i: int, c: list[int], eps: list[bool] | None, region: list[Constraint]) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise EnumerationLimitExceeded(f"cell enumeration exceeded {max_nodes} nodes")
        if i == len(A):
            leaf(c, eps, region)
            return
        for ci in ranges[i]:
            if kind == DELTA:
                options = _delta_options(A[i], ci)
            else:
                options = [(None, _lambda_constraints(A[i], ci))]
            for flag, extra in options:
                trial = region + extra
                if find_point(d, box + trial) is None:
                    continue
                walk(i + 1, c + [ci], None if flag is None else eps + [flag], trial)

    walk(0, [], [] if kind == DELTA else None, [])
    return tuple(sorted(found.values(), key=lambda cell: (-cell.dimension, cell.key)))


def cell_census(P: Polytope, kind: str = DELTA) -> dict[int, int]:
    out: dict[int, int] = {}
    for cell in enumerate_cells(P, kind):
        out[cell.dimension] = out.get(cell.dimension, 0) + 1
    return dict(sorted(out.items()))


def find_cell(P: Polytope, key: CellKey) -> Cell:
    for cell in enumerate_cells(P, key.kind):
        if cell.key == key:
            return cell
    raise KeyError(key)


def negate_cell(P: Polytope, cell: Cell | CellKey) -> CellKey:
    """Key of the cell -C, from a stored representative of C."""
    if isinstance(cell, CellKey):
        cell = find_cell(P, cell)
    rep = tuple(-x for x in cell.representative)
    return delta_key(P, rep) if cell.key.eps is not None else lambda_key(P, rep)


def orbit_classify(P: Polytope, v: Sequence, k_max: int) -> list[tuple[int, CellKey]]:
    """Delta keys of the orbit points [k v], k = 0..k_max."""
    v = exact.as_ratvector(v)
    return [(k, delta_key(P, tuple(k * x for x in v))) for k in range(k_max + 1)]


class CellTable:
    """Cache of translated enumerators keyed by canonical delta key.

    In ``exhaustive`` mode every cell is enumerated up front and lookups of
    unknown keys fail.  Lookups are guarded by a lock; a miss computes
    outside the lock and inserts idempotently.
    """

    def __init__(self, P: Polytope, mode: str = "lazy"):
        if mode not in ("lazy", "exhaustive"):
            raise ValueError(f"unknown table mode {mode!r}")
        self.polytope = P
        self.mode = mode
        self._lock = threading.Lock()
        self._values: dict[CellKey, object] = {}
        self._reps: dict[CellKey, RatVector] = {}
        if mode == "exhaustive":
            for cell in enumerate_cells(P, DELTA):
                self._reps[cell.key] = cell.representative

    def __len__(self) -> int:
        return len(self._values)

    def keys(self) -> list[CellKey]:
        with self._lock:
            return sorted(set(self._reps) | set(self._values))

    def representative(self, key: CellKey) -> RatVector:
        with self._lock:
            rep = self._reps.get(key)
        if rep is None:
            raise KeyError(f"no representative stored for {key.label()}")
        return rep

    def _compute(self, v: RatVector):
        from .translate import tl

        return tl(self.polytope, v)

    def _insert(self, key: CellKey, v: RatVector, value) -> object:
        with self._lock:
            self._reps.setdefault(key, v)
            return self._values.setdefault(key, value)

    def tl_at(self, v: Sequence):
        v = reduce_mod_integers(v)
        key = delta_key(self.polytope, v)
        with self._lock:
            if key in self._values:
                return self._values[key]
            if self.mode == "exhaustive" and key not in self._reps:
                raise KeyError(f"{key.label()} is not a cell of the enumerated table")
        return self._insert(key, v, self._compute(v))

    def tl_cell(self, key: CellKey):
        with self._lock:
            if key in self._values:
                return self._values[key]
            rep = self._reps.get(key)
        if rep is None:
            if self.mode == "exhaustive":
                raise KeyError(f"{key.label()} is not a cell of the enumerated table")
            rep = find_cell(self.polytope, key).representative
        return self._insert(key, rep, self._compute(rep))
