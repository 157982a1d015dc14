"""Full-dimensional rational polytopes given by vertices.

The facet description is the unique irredundant one with inner normals:
``P = {x : (a_i, x) >= b_i}`` where each ``(a_i, b_i)`` is a primitive
integer vector.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import exact
from .exact import IntVector, RatVector, dot


class PolytopeError(ValueError):
    """Raised for empty, degenerate or malformed polytope input."""


@dataclass(frozen=True)
class FacetInequality:
    normal: IntVector
    offset: int

    def value(self, x: Sequence) -> Fraction:
        return dot(self.normal, x) - self.offset


@dataclass(frozen=True)
class Facet:
    index: int
    inequality: FacetInequality
    vertices: tuple[RatVector, ...]
    relative_volume: Fraction

    @property
    def normal(self) -> IntVector:
        return self.inequality.normal


def _hyperplanes(points: Sequence[RatVector], d: int) -> list[FacetInequality]:
    found: dict[tuple, FacetInequality] = {}
    for subset in itertools.combinations(range(len(points)), d):
        base = points[subset[0]]
        diffs = [[p - b for p, b in zip(points[j], base)] for j in subset[1:]]
        if d == 1:
            normal = (Fraction(1),)
        else:
            normal = exact.nullvector(diffs)
            if normal is None:
                continue
        a = exact.integer_scale(normal)
        vals = [dot(a, p) for p in points]
        ref = dot(a, base)
        lo = all(v >= ref for v in vals)
        hi = all(v <= ref for v in vals)
        if not (lo or hi):
            continue
        if not lo:
            a = tuple(-x for x in a)
            ref = -ref
        den = ref.denominator
        g = math.gcd(exact.vector_gcd(a) * den, ref.numerator)
        a = tuple(x * den // g for x in a)
        b = ref.numerator // g
        ineq = FacetInequality(a, b)
        found[(a, b)] = ineq
    return list(found.values())


def _affine_rank(points: Sequence[RatVector]) -> int:
    if not points:
        return -1
    base = points[0]
    return exact.rank([[p - b for p, b in zip(q, base)] for q in points[1:]]) if len(points) > 1 else 0


class Polytope:
    """A full-dimensional rational polytope in R^d."""

    def __init__(self, vertices: Iterable[Sequence]):
        pts = sorted({exact.as_ratvector(p) for p in vertices})
        if not pts:
            raise PolytopeError("empty vertex list")
        d = len(pts[0])
        if d == 0 or any(len(p) != d for p in pts):
            raise PolytopeError("inconsistent or zero coordinate dimension")
        if _affine_rank(pts) != d:
            raise PolytopeError("points do not affinely span R^%d" % d)
        ineqs = _hyperplanes(pts, d)
        verts = []
        for p in pts:
            tight = [h.normal for h in ineqs if h.value(p) == 0]
            if tight and exact.rank(tight) == d:
                verts.append(p)
        # keep only inequalities that support a genuine facet
        facets = []
        for h in ineqs:
            on = [v for v in verts if h.value(v) == 0]
            if _affine_rank(on) == d - 1:
                facets.append(h)
        facets.sort(key=lambda h: (h.normal, h.offset))
        self.dim = d
        self.vertices: tuple[RatVector, ...] = tuple(verts)
        self.inequalities: tuple[FacetInequality, ...] = tuple(facets)

    @classmethod
    def from_vertices(cls, points: Iterable[Sequence]) -> "Polytope":
        return cls(points)

    def __repr__(self) -> str:
        vs = ", ".join("(" + ",".join(exact.format_rational(x) for x in v) + ")" for v in self.vertices)
        return f"Polytope([{vs}])"

    def __eq__(self, other) -> bool:
        return isinstance(other, Polytope) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    @property
    def normals(self) -> tuple[IntVector, ...]:
        """N(P): the primitive inner normals in facet order."""
        return tuple(h.normal for h in self.inequalities)

    @property
    def offsets(self) -> tuple[int, ...]:
        return tuple(h.offset for h in self.inequalities)

    @cached_property
    def denominator(self) -> int:
        return exact.lcm_all(x.denominator for v in self.vertices for x in v)

    def contains(self, x: Sequence) -> bool:
        return all(h.value(x) >= 0 for h in self.inequalities)

    def facet_vertex_sets(self) -> list[frozenset[int]]:
        out = []
        for h in self.inequalities:
            out.append(frozenset(i for i, v in enumerate(self.vertices) if h.value(v) == 0))
        return out

    @cached_property
    def facets(self) -> tuple[Facet, ...]:
        out = []
        for i, (h, vs) in enumerate(zip(self.inequalities, self.facet_vertex_sets())):
            verts = tuple(self.vertices[j] for j in sorted(vs))
            out.append(Facet(i, h, verts, _relative_volume(h.normal, verts, self.dim)))
        return tuple(out)

    @cached_property
    def volume(self) -> Fraction:
        return _triangulated_volume(self)

    def vertex_centroid(self) -> RatVector:
        n = len(self.vertices)
        return tuple(sum(v[j] for v in self.vertices) / n for j in range(self.dim))

    def translate(self, w: Sequence) -> "Polytope":
        w = exact.as_ratvector(w)
        return Polytope([tuple(a + b for a, b in zip(v, w)) for v in self.vertices])

    def scale(self, k) -> "Polytope":
        k = Fraction(k)
        return Polytope([tuple(k * a for a in v) for v in self.vertices])

    def linear_image(self, g: Sequence[Sequence[int]]) -> "Polytope":
        return Polytope([tuple(dot(row, v) for row in g) for v in self.vertices])

    def negate(self) -> "Polytope":
        return self.scale(-1)


def from_vertices(points: Iterable[Sequence]) -> Polytope:
    return Polytope(points)


def facet_description(P: Polytope) -> tuple[FacetInequality, ...]:
    return P.inequalities


def denominator(P: Polytope) -> int:
    return P.denominator


def volume(P: Polytope) -> Fraction:
    return P.volume


def relative_volume(F: Facet) -> Fraction:
    return F.relative_volume


def _relative_volume(normal: IntVector, verts: Sequence[RatVector], d: int) -> Fraction:
    # volume w.r.t. the lattice {x in Z^d : (normal, x) = 0}, measured by a
    # unimodular change of coordinates sending normal to e_1^T
    if d == 1:
        return Fraction(1)
    U = exact.unimodular_completion(normal)
    Uinv = _integer_inverse(U)
    base = verts[0]
    coords = []
    for v in verts:
        y = [dot(row, [a - b for a, b in zip(v, base)]) for row in Uinv]
        assert y[0] == 0
        coords.append(tuple(y[1:]))
    return Polytope(coords).volume


def _integer_inverse(U: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(U)
    cols = [exact.solve(U, [int(i == j) for i in range(n)]) for j in range(n)]
    inv = [[cols[j][i] for j in range(n)] for i in range(n)]
    assert all(x.denominator == 1 for r in inv for x in r)
    return [[int(x) for x in r] for r in inv]


def _triangulated_volume(P: Polytope) -> Fraction:
    """Volume from a recursive fan triangulation and simplex determinants."""
    d = P.dim
    verts = P.vertices
    facet_sets = P.facet_vertex_sets()

    def faces_below(face: frozenset[int], k: int) -> list[frozenset[int]]:
        subs = set()
        for fs in facet_sets:
            g = face & fs
            if g != face and _affine_rank([verts[i] for i in g]) == k - 1:
                subs.add(frozenset(g))
        return sorted(subs, key=sorted)

    def simplices(face: frozenset[int], k: int) -> list[list[int]]:
        if k == 0:
            return [[min(face)]]
        apex = min(face)
        out = []
        for sub in faces_below(face, k):
            if apex in sub:
                continue
            for s in simplices(sub, k - 1):
                out.append([apex] + s)
        return out

    total = Fraction(0)
    for s in simplices(frozenset(range(len(verts))), d):
        base = verts[s[0]]
        M = [[a - b for a, b in zip(verts[j], base)] for j in s[1:]]
        total += abs(exact.det(M))
    return total / math.factorial(d)


def project(P: Polytope, i: int) -> Polytope:
    """Drop coordinate ``i`` (1-based)."""
    if P.dim < 2:
        raise PolytopeError("cannot project a 1-dimensional polytope")
    if not 1 <= i <= P.dim:
        raise PolytopeError(f"coordinate index {i} out of range 1..{P.dim}")
    return Polytope([v[: i - 1] + v[i:] for v in P.vertices])


def project_point(v: Sequence, i: int) -> RatVector:
    v = exact.as_ratvector(v)
    return v[: i - 1] + v[i:]


@dataclass(frozen=True)
class CentralSymmetry:
    center: RatVector
    pairing: dict = field(compare=False)

    @property
    def shift(self) -> RatVector:
        """u with P = -P + u."""
        return tuple(2 * c for c in self.center)

    def partner(self, v: Sequence) -> RatVector:
        return tuple(2 * c - x for c, x in zip(self.center, v))


def central_symmetry(P: Polytope) -> CentralSymmetry | None:
    """Center c with 2c - v a vertex for every vertex v, or None."""
    c = P.vertex_centroid()
    vs = set(P.vertices)
    pairing = {}
    for v in P.vertices:
        w = tuple(2 * a - b for a, b in zip(c, v))
        if w not in vs:
            return None
        pairing[v] = w
    return CentralSymmetry(c, pairing)


# -- file format ---------------------------------------------------------

def to_document(P: Polytope) -> dict:
    return {
        "dimension": P.dim,
        "vertices": [[exact.format_rational(x) for x in v] for v in P.vertices],
    }


def from_document(doc: dict) -> Polytope:
    try:
        d = int(doc["dimension"])
        pts = [tuple(exact.parse_rational(str(x)) for x in v) for v in doc["vertices"]]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise PolytopeError(f"malformed polytope document: {exc}") from exc
    if any(len(p) != d for p in pts):
        raise PolytopeError("vertex length does not match 'dimension'")
    return Polytope(pts)


def dumps(P: Polytope) -> str:
    return json.dumps(to_document(P), indent=2) + "\n"


def loads(text: str) -> Polytope:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolytopeError(f"not a JSON polytope document: {exc}") from exc
    return from_document(doc)


def load(path) -> Polytope:
    with open(path) as fh:
        return loads(fh.read())
