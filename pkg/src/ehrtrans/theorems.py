"""Executable checks of reciprocity, symmetry, projection and rigidity statements.

Checks return a :class:`Report` instead of raising, except where a
precondition is not met.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import exact
from .cells import DELTA, CellTable, delta_key, enumerate_cells, negate_cell
from .counting import MINUS, PLUS, count, count_facet, count_partial_boundary
from .exact import RatVector, dot
from .polytope import Polytope, central_symmetry, project, project_point
from .quasipoly import QuasiPolynomial, fit, is_symmetric, reciprocity_transform
from .translate import ehr_translated, tl


class NotCentrallySymmetricOverZ(ValueError):
    """-P is not an integer translate of P."""


@dataclass
class Report:
    name: str
    passed: bool = True
    items: list[dict] = field(default_factory=list)

    def add(self, ok: bool, **info) -> None:
        self.items.append({"ok": bool(ok), **info})
        self.passed = self.passed and bool(ok)

    @property
    def failures(self) -> list[dict]:
        return [x for x in self.items if not x["ok"]]

    def to_document(self) -> dict:
        return {"check": self.name, "passed": self.passed, "items": _jsonable(self.items)}


def _jsonable(x):
    if isinstance(x, Fraction):
        return exact.format_rational(x)
    if isinstance(x, QuasiPolynomial):
        return x.to_document()
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "to_document"):
        return x.to_document()
    return x


def _vec(v) -> str:
    return ",".join(exact.format_rational(x) for x in v)


def grid(d: int, den: int) -> Iterable[RatVector]:
    """(Z/den)^d ∩ [0,1)^d in lexicographic order."""
    for idx in itertools.product(range(den), repeat=d):
        yield tuple(Fraction(i, den) for i in idx)


# -- reciprocity on maximal cells ---------------------------------------

def check_maximal_cell_reciprocity(P: Polytope, table: CellTable | None = None) -> Report:
    """TL_{P,C}(t) = (-1)^d TL_{P,-C}(-t) for every d-dimensional cell C."""
    table = table or CellTable(P)
    rep = Report("reciprocity")
    for cell in enumerate_cells(P, DELTA):
        if cell.dimension != P.dim:
            continue
        neg = negate_cell(P, cell)
        f = table.tl_cell(cell.key)
        g = reciprocity_transform(table.tl_cell(neg), P.dim)
        rep.add(f == g, cell=cell.key.label(), negated=neg.label(), tl=f, transformed=g)
    return rep


def integer_central_shift(P: Polytope):
    """u in Z^d with -P = P + u, or None."""
    cs = central_symmetry(P)
    if cs is None:
        return None
    u = tuple(-x for x in cs.shift)
    return u if exact.is_integral(u) else None


def check_cs_parity(P: Polytope, table: CellTable | None = None) -> Report:
    """Constituent parity on maximal cells of a polytope with -P = P + u, u integral."""
    if integer_central_shift(P) is None:
        raise NotCentrallySymmetricOverZ("-P is not an integer translate of P")
    table = table or CellTable(P)
    d = P.dim
    q = P.denominator
    sign = -1 if d % 2 else 1
    rep = Report("cs-parity")
    ks = [0] + ([1] if q <= 2 and q > 1 else [])
    for cell in enumerate_cells(P, DELTA):
        if cell.dimension != d:
            continue
        f = table.tl_cell(cell.key)
        for k in range(q):
            lhs = f.constituent(k)
            rhs = f.constituent(-k).compose_scale(-1) * sign
            rep.add(lhs == rhs, cell=cell.key.label(), k=k, kind="theorem")
        for k in ks:
            p = f.constituent(k)
            rep.add(p.is_even() or p.is_odd(), cell=cell.key.label(), k=k, kind="parity", constituent=str(p))
    return rep


# -- symmetry characterization ------------------------------------------

def vertex_pairing_integral(P: Polytope) -> bool:
    """Predicate (ii): P is centrally symmetric and v - v* is integral for every vertex v."""
    cs = central_symmetry(P)
    if cs is None:
        return False
    return all(exact.is_integral(tuple(a - b for a, b in zip(v, cs.partner(v)))) for v in P.vertices)


@dataclass
class SymmetryVerdict:
    predicate_ii: bool
    sampled_symmetric: bool
    witness: RatVector | None
    samples: int

    @property
    def consistent(self) -> bool:
        return self.predicate_ii == self.sampled_symmetric

    def to_document(self) -> dict:
        return {
            "predicate_ii": self.predicate_ii,
            "sampled_symmetric": self.sampled_symmetric,
            "witness": None if self.witness is None else _vec(self.witness),
            "samples": self.samples,
            "consistent": self.consistent,
        }


def check_symmetry_characterization(P: Polytope, sample_denominator: int) -> SymmetryVerdict:
    """Compare predicate (ii) with symmetry of ehr_{P+v} over a rational grid.

    Sampling stops at the first v with a non-symmetric ehr_{P+v}.
    """
    table = CellTable(P)
    witness = None
    n = 0
    for v in grid(P.dim, sample_denominator):
        n += 1
        if not is_symmetric(ehr_translated(P, v, table)):
            witness = v
            break
    return SymmetryVerdict(vertex_pairing_integral(P), witness is None, witness, n)


def check_symmetric_criterion(P: Polytope, vs: Iterable[Sequence]) -> tuple[bool, bool]:
    """Both sides of the constituent criterion on samples.

    Returns (all sampled ehr symmetric, all sampled constituent identities hold).
    """
    table = CellTable(P)
    left = right = True
    for v in vs:
        v = exact.as_ratvector(v)
        left = left and is_symmetric(ehr_translated(P, v, table))
        f = table.tl_at(v)
        g = table.tl_at(tuple(-x for x in v))
        q = math.lcm(f.period, g.period)
        right = right and all(f.constituent(k) == g.constituent(-k) for k in range(q))
    return left, right


# -- projections ---------------------------------------------------------

def crossing_shifts(P: Polytope, i: int, v: Sequence) -> list[Fraction]:
    """s in [0,1) with (a, v) + s*a_i integral for some normal a with a_i != 0."""
    v = exact.as_ratvector(v)
    j = i - 1
    out = set()
    for a in P.normals:
        ai = a[j]
        if ai == 0:
            continue
        base = dot(a, v)
        # s = (k - base) / ai for integers k with 0 <= s < 1
        lo, hi = sorted((base, base + ai))
        for k in range(exact.rational_ceil(lo), exact.rational_floor(hi) + 1):
            s = (k - base) / ai
            if 0 <= s < 1:
                out.add(s)
    return sorted(out)


def projection_sides(P: Polytope, i: int, v: Sequence, t: int, variant: str = MINUS) -> tuple[int, int]:
    """Left and right side of the projection identity at t.

    ``-``: sum over s of lattice points of t∂_i^-P + v + s e_i.
    ``+``: sum over s of lattice points of t∂_i^+P + v - s e_i.
    """
    v = exact.as_ratvector(v)
    lhs = count(project(P, i), project_point(v, i), t)
    sgn = 1 if variant == MINUS else -1
    rhs = 0
    for s in crossing_shifts(P, i, tuple(sgn * x for x in v)):
        w = tuple(x + (sgn * s if k == i - 1 else 0) for k, x in enumerate(v))
        rhs += count_partial_boundary(P, w, t, i, variant)
    return lhs, rhs


def check_projection_identity(P: Polytope, i: int, v: Sequence, t_max: int, variants=(MINUS, PLUS)) -> Report:
    rep = Report("projection")
    for variant in variants:
        for t in range(t_max + 1):
            lhs, rhs = projection_sides(P, i, v, t, variant)
            rep.add(lhs == rhs, coordinate=i, variant=variant, v=_vec(v), t=t, lhs=lhs, rhs=rhs)
    return rep


# -- Minkowski data and codimension-one cells ------------------------------

@dataclass(frozen=True)
class MinkowskiData:
    pairs: frozenset

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def as_dict(self) -> dict:
        return dict(self.pairs)

    def to_document(self) -> list:
        return [{"normal": list(a), "volume": exact.format_rational(vol)} for a, vol in self]


def minkowski_data(P: Polytope) -> MinkowskiData:
    return MinkowskiData(frozenset((f.normal, f.relative_volume) for f in P.facets))


def generic_point_on(P: Polytope, facet_index: int) -> RatVector:
    """Representative of a (d-1)-cell lying on a hyperplane parallel to the given facet."""
    a = P.normals[facet_index]
    for cell in enumerate_cells(P, DELTA):
        if cell.dimension != P.dim - 1:
            continue
        on = [P.normals[j] for j, e in enumerate(cell.key.eps) if e]
        if all(exact.rank([a, b]) == 1 for b in on) and a in on:
            return cell.representative
    raise LookupError(f"no codimension-one cell on a hyperplane with normal {a}")


def perturbation(P: Polytope, v: Sequence, direction: Sequence) -> Fraction:
    """Half the largest step along ``direction`` keeping all non-integral phi-values in their open interval."""
    v = exact.as_ratvector(v)
    best = None
    for a in P.normals:
        rate = dot(a, direction)
        x = dot(a, v)
        if rate == 0 or x.denominator == 1:
            continue
        room = (exact.rational_ceil(x) - x) if rate > 0 else (x - exact.rational_floor(x))
        step = room / abs(rate)
        best = step if best is None or step < best else best
    return (best if best is not None else Fraction(1)) / 2


def facet_enumerator(P: Polytope, facet_index: int, v: Sequence) -> QuasiPolynomial:
    v = exact.as_ratvector(v)
    return fit(lambda t: count_facet(P, facet_index, v, t), P.denominator, P.dim)


def check_codim1(P: Polytope, facet_index: int) -> Report:
    """Facet recovery from a generic point v on a hyperplane of the facet direction.

    TL_{P,v} - TL_{P,v+eps*a} = TL_{F,v}; when -a is not a normal also
    TL_{P,v} = TL_{P,v-eps*a}; and the degree d-1 coefficient of the 0th
    constituent of TL_{F,v} is the relative volume of F.
    """
    rep = Report("codim1")
    a = P.normals[facet_index]
    v = generic_point_on(P, facet_index)
    eps = perturbation(P, v, a)
    up = tuple(x + eps * y for x, y in zip(v, a))
    down = tuple(x - eps * y for x, y in zip(v, a))
    k0, k1 = delta_key(P, v), delta_key(P, up)
    changed = [j for j, (e0, e1) in enumerate(zip(k0.eps, k1.eps)) if e0 != e1]
    parallel = [j for j, b in enumerate(P.normals) if exact.rank([a, b]) == 1]
    rep.add(sorted(changed) == sorted(parallel) and not any(k1.eps), step="perturbation", eps=eps)
    f_v, f_up = tl(P, v), tl(P, up)
    facet_tl = facet_enumerator(P, facet_index, v)
    diff = QuasiPolynomial(f_v.period, tuple(f_v.constituent(k) - f_up.constituent(k) for k in range(f_v.period)))
    rep.add(diff == facet_tl and any(c.coeffs for c in facet_tl.constituents), step="difference", v=_vec(v))
    if tuple(-x for x in a) not in P.normals:
        rep.add(tl(P, down) == f_v, step="opposite side")
    lead = facet_tl.constituent(0).coeff(P.dim - 1)
    rep.add(lead == P.facets[facet_index].relative_volume, step="facet volume", coefficient=lead)
    return rep


# -- rigidity -------------------------------------------------------------

def equivalent_up_to_integer_translation(P: Polytope, Q: Polytope) -> tuple[int, ...] | None:
    """w in Z^d with P = Q + w, or None."""
    if P.dim != Q.dim or len(P.vertices) != len(Q.vertices):
        return None
    w = tuple(a - b for a, b in zip(P.vertex_centroid(), Q.vertex_centroid()))
    if not exact.is_integral(w):
        return None
    shifted = sorted(tuple(x + y for x, y in zip(v, w)) for v in Q.vertices)
    if shifted != list(P.vertices):
        return None
    return tuple(int(x) for x in w)


@dataclass
class Fingerprint:
    separator: tuple[RatVector, int] | None
    counts: tuple[int, int] | None = None

    @property
    def distinguishes(self) -> bool:
        return self.separator is not None

    def to_document(self) -> dict:
        if self.separator is None:
            return {"distinguishes": False}
        v, t = self.separator
        return {"distinguishes": True, "v": _vec(v), "t": t, "counts": list(self.counts)}


def fingerprint_distinguishes(P: Polytope, Q: Polytope, sample_denominator: int, t_max: int) -> Fingerprint:
    """First (v, t) on the grid with #(tP+v ∩ Z^d) != #(tQ+v ∩ Z^d)."""
    if P.dim != Q.dim:
        raise ValueError("polytopes of different dimension")
    for t in range(t_max + 1):
        for v in grid(P.dim, sample_denominator):
            a, b = count(P, v, t), count(Q, v, t)
            if a != b:
                return Fingerprint((v, t), (a, b))
    return Fingerprint(None)


# -- automorphisms ----------------------------------------------------------

def is_automorphism(P: Polytope, g: Sequence[Sequence[int]]) -> bool:
    if abs(exact.det(g)) != 1:
        return False
    image = P.linear_image(g)
    return equivalent_up_to_integer_translation(image, P) is not None


def automorphisms(P: Polytope, entry_bound: int = 1) -> list[tuple[tuple[int, ...], ...]]:
    """Unimodular g with entries in [-B, B] and g(P) = P + w, w integral."""
    d = P.dim
    if d > 3:
        raise ValueError("automorphism search is limited to d <= 3")
    rng = range(-entry_bound, entry_bound + 1)
    out = []
    rows = list(itertools.product(rng, repeat=d))
    for g in itertools.product(rows, repeat=d):
        if is_automorphism(P, g):
            out.append(tuple(g))
    return sorted(out)


def check_automorphism_invariance(P: Polytope, g: Sequence[Sequence[int]], samples: Iterable[Sequence]) -> Report:
    """TL_{P,g(v)} = TL_{P,v} on the sampled v."""
    rep = Report("automorphisms")
    table = CellTable(P)
    for v in samples:
        v = exact.as_ratvector(v)
        gv = tuple(dot(row, v) for row in g)
        rep.add(table.tl_at(gv) == table.tl_at(v), g=[list(r) for r in g], v=_vec(v))
    return rep
