"""SVG picture of the cell decomposition of the torus R^2/Z^2.

Faces are colored by their translated enumerator, so cells with equal
TL share a color.  Output is deterministic.
"""
from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Sequence

from . import exact
from .cells import DELTA, CellKey, CellTable, canonical, delta_key, enumerate_cells
from .exact import dot
from .polytope import Polytope

SIZE = 400
MARGIN = 24

Point = tuple[Fraction, Fraction]


def _clip(poly: list[Point], a, lo=None, hi=None) -> list[Point]:
    """Clip a convex polygon to lo <= (a, x) <= hi."""
    if lo is not None:
        poly = _half(poly, a, lo, 1)
    if hi is not None:
        poly = _half(poly, a, hi, -1)
    return poly


def _half(poly: list[Point], a, bound, sign) -> list[Point]:
    # keep sign * ((a, x) - bound) >= 0
    out: list[Point] = []
    n = len(poly)
    for k in range(n):
        p, r = poly[k], poly[(k + 1) % n]
        fp = sign * (dot(a, p) - bound)
        fr = sign * (dot(a, r) - bound)
        if fp >= 0:
            out.append(p)
        if (fp > 0 > fr) or (fp < 0 < fr):
            s = fp / (fp - fr)
            out.append((p[0] + s * (r[0] - p[0]), p[1] + s * (r[1] - p[1])))
    dedup: list[Point] = []
    for p in out:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def _area(poly: Sequence[Point]) -> Fraction:
    n = len(poly)
    return abs(sum(poly[i][0] * poly[(i + 1) % n][1] - poly[(i + 1) % n][0] * poly[i][1] for i in range(n))) / 2


UNIT: list[Point] = [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)), (Fraction(1), Fraction(1)), (Fraction(0), Fraction(1))]


def face_pieces(P: Polytope) -> dict[CellKey, list[list[Point]]]:
    """Pieces of the unit square cut out by the 2-cells, grouped by cell."""
    A = P.normals
    out: dict[CellKey, list[list[Point]]] = {}

    def walk(i: int, poly: list[Point], c: list[int]) -> None:
        if i == len(A):
            key = canonical(P, c, [False] * len(A))
            out.setdefault(key, []).append(poly)
            return
        vals = [dot(A[i], p) for p in poly]
        for ci in range(exact.rational_ceil(min(vals)), exact.rational_ceil(max(vals)) + 1):
            piece = _clip(poly, A[i], ci - 1, ci)
            if len(piece) >= 3 and _area(piece) > 0:
                walk(i + 1, piece, c + [ci])

    walk(0, list(UNIT), [])
    return out


def _lines(P: Polytope) -> list[tuple[tuple[int, ...], int]]:
    """Distinct lines (a, x) = k meeting the closed unit square, a normalized up to sign."""
    seen = set()
    for a in P.normals:
        if next(x for x in a if x != 0) < 0:
            a = tuple(-x for x in a)
        vals = [dot(a, p) for p in UNIT]
        for k in range(exact.rational_ceil(min(vals)), exact.rational_floor(max(vals)) + 1):
            seen.add((a, k))
    return sorted(seen)


def _segment(a, k) -> tuple[Point, Point] | None:
    pts = _clip(list(UNIT), a, k, k)
    pts = sorted(set(pts))
    if len(pts) < 2:
        return None
    return pts[0], pts[-1]


def edge_pieces(P: Polytope) -> tuple[list[tuple[tuple, int, Point, Point]], dict[CellKey, list[tuple[Point, Point]]]]:
    """Hyperplane traces and their subdivision into 1-cell pieces."""
    traces = []
    pieces: dict[CellKey, list[tuple[Point, Point]]] = {}
    lines = _lines(P)
    for a, k in lines:
        seg = _segment(a, k)
        if seg is None:
            continue
        p, r = seg
        traces.append((a, k, p, r))
        cuts = {Fraction(0), Fraction(1)}
        for b, _ in lines:
            fb, gb = dot(b, p), dot(b, r)
            if fb == gb:
                continue
            lo, hi = sorted((fb, gb))
            for j in range(exact.rational_ceil(lo), exact.rational_floor(hi) + 1):
                cuts.add((j - fb) / (gb - fb))
        cuts = sorted(cuts)
        for s0, s1 in zip(cuts, cuts[1:]):
            x0 = (p[0] + s0 * (r[0] - p[0]), p[1] + s0 * (r[1] - p[1]))
            x1 = (p[0] + s1 * (r[0] - p[0]), p[1] + s1 * (r[1] - p[1]))
            mid = ((x0[0] + x1[0]) / 2, (x0[1] + x1[1]) / 2)
            pieces.setdefault(delta_key(P, mid), []).append((x0, x1))
    return traces, pieces


def tl_color(doc: dict) -> str:
    digest = hashlib.sha256(json.dumps(doc, sort_keys=True).encode()).hexdigest()
    r, g, b = (int(digest[i : i + 2], 16) for i in (0, 2, 4))
    # keep colors light enough for dark strokes to stay visible
    r, g, b = (96 + x * 159 // 255 for x in (r, g, b))
    return f"#{r:02x}{g:02x}{b:02x}"


def _xy(p: Point) -> tuple[str, str]:
    x = MARGIN + float(p[0]) * SIZE
    y = MARGIN + (1 - float(p[1])) * SIZE
    return f"{x:.3f}", f"{y:.3f}"


def render(P: Polytope, v: Sequence | None = None, kmax: int = 0, table: CellTable | None = None) -> str:
    if P.dim != 2:
        raise ValueError("plots are only available for d = 2")
    table = table or CellTable(P)
    cells = enumerate_cells(P, DELTA)
    dims = {c.key: c.dimension for c in cells}
    W = SIZE + 2 * MARGIN
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{W}" viewBox="0 0 {W} {W}">',
        f'<rect class="square" x="{MARGIN}" y="{MARGIN}" width="{SIZE}" height="{SIZE}" fill="none" stroke="#000000"/>',
    ]
    faces = face_pieces(P)
    for key in sorted(faces):
        color = tl_color(table.tl_cell(key).to_document())
        d = " ".join("M " + " L ".join(" ".join(_xy(p)) for p in poly) + " Z" for poly in faces[key])
        out.append(f'<path class="face" data-cell="{key.label()}" d="{d}" fill="{color}" stroke="none"/>')
    traces, edges = edge_pieces(P)
    for a, k, p, r in traces:
        (x0, y0), (x1, y1) = _xy(p), _xy(r)
        out.append(f'<polyline class="trace" data-line="{",".join(map(str, a))}={k}" points="{x0},{y0} {x1},{y1}" fill="none" stroke="#999999" stroke-width="0.5"/>')
    for key in sorted(edges):
        if dims.get(key) != 1:
            continue
        color = tl_color(table.tl_cell(key).to_document())
        d = " ".join("M {} {} L {} {}".format(*_xy(s0), *_xy(s1)) for s0, s1 in edges[key])
        out.append(f'<path class="edge" data-cell="{key.label()}" d="{d}" fill="none" stroke="{color}" stroke-width="3"/>')
    for cell in cells:
        if cell.dimension != 0:
            continue
        x, y = _xy(cell.representative)
        color = tl_color(table.tl_cell(cell.key).to_document())
        out.append(f'<rect class="vertex" data-cell="{cell.key.label()}" x="{float(x) - 4:.3f}" y="{float(y) - 4:.3f}" width="8" height="8" fill="{color}" stroke="#000000"/>')
    if v is not None:
        v = exact.as_ratvector(v)
        for k in range(kmax + 1):
            p = tuple(k * x - exact.rational_floor(k * x) for x in v)
            x, y = _xy(p)
            out.append(f'<circle class="orbit" cx="{x}" cy="{y}" r="2.5" fill="#000000"/>')
            out.append(f'<text class="orbit-label" x="{float(x) + 3:.3f}" y="{float(y) - 3:.3f}" font-size="7">{k}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
