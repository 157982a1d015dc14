"""Command line interface: ``ehrtrans <command> POLYTOPE.json [options]``.

Exit codes: 0 success, 1 a verification check failed, 2 unparsable input,
3 a precondition of the requested computation does not hold.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cells as cellmod
from . import exact, hilbert, plot, theorems
from .cells import CellTable, EnumerationLimitExceeded
from .counting import count
from .polytope import Polytope, PolytopeError, load
from .quasipoly import format_congruence, reciprocity_transform
from .translate import ehr_translated, tl, tl_interior

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3

CHECKS = ("reciprocity", "symmetry", "projection", "automorphisms", "fingerprint", "cs-parity", "minkowski")


class Precondition(Exception):
    pass


class ParseError(Exception):
    pass


def _vector(text: str, d: int):
    try:
        v = exact.parse_vector(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad vector literal {text!r}: {exc}") from exc
    if len(v) != d:
        raise ParseError(f"vector {text!r} has length {len(v)}, polytope has dimension {d}")
    return v


def _load(args) -> Polytope:
    try:
        P = load(args.polytope)
    except OSError as exc:
        raise ParseError(str(exc)) from exc
    except PolytopeError as exc:
        raise ParseError(str(exc)) from exc
    if P.dim > args.max_dim:
        raise Precondition(f"dimension {P.dim} exceeds --max-dim {args.max_dim}")
    return P


def _enumeration_limits(P: Polytope, args) -> None:
    if len(P.normals) > args.max_facets:
        raise Precondition(f"{len(P.normals)} facets exceed --max-facets {args.max_facets}")


def _emit(args, text_lines, doc) -> None:
    if args.format == "structured":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _qp_lines(f) -> list[str]:
    return [f"period {f.period}"] + format_congruence(f)


# -- commands ---------------------------------------------------------------

def cmd_count(args) -> int:
    P = _load(args)
    v = _vector(args.translate, P.dim) if args.translate else (Fraction(0),) * P.dim
    if args.dilate < 0:
        raise Precondition("--dilate must be nonnegative")
    n = count(P, v, args.dilate)
    _emit(args, [str(n)], {"count": n, "t": args.dilate, "v": [exact.format_rational(x) for x in v]})
    return EXIT_OK


def cmd_tl(args) -> int:
    P = _load(args)
    v = _vector(args.translate, P.dim) if args.translate else (Fraction(0),) * P.dim
    f = tl_interior(P, v) if args.interior else tl(P, v)
    if args.minimize_period:
        f = f.minimize()
    _emit(args, _qp_lines(f), {"quasi_polynomial": f.to_document()})
    return EXIT_OK


def cmd_ehrhart(args) -> int:
    P = _load(args)
    v = _vector(args.translate, P.dim) if args.translate else (Fraction(0),) * P.dim
    f = ehr_translated(P, v, minimize=args.minimize_period)
    _emit(args, _qp_lines(f), {"quasi_polynomial": f.to_document(), "classes": format_congruence(f)})
    return EXIT_OK


def cmd_cells(args) -> int:
    P = _load(args)
    _enumeration_limits(P, args)
    table = CellTable(P)
    records, lines = [], []
    for cell in cellmod.enumerate_cells(P, args.kind):
        rep = cell.representative
        f = table.tl_at(rep)
        rec = {
            "key": cell.key.to_document(),
            "dimension": cell.dimension,
            "representative": [exact.format_rational(x) for x in rep],
            "tl": f.to_document(),
        }
        records.append(rec)
        cons = ", ".join(str(p) for p in f.constituents)
        lines.append(f"{cell.key.label()}  dim={cell.dimension}  rep=({','.join(rec['representative'])})  TL=({cons})")
    _emit(args, lines, {"kind": args.kind, "cells": records})
    return EXIT_OK


def cmd_plot(args) -> int:
    P = _load(args)
    _enumeration_limits(P, args)
    if P.dim != 2:
        raise Precondition("plot needs a 2-dimensional polytope")
    v = _vector(args.translate, 2) if args.translate else None
    svg = plot.render(P, v, args.kmax)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(svg)
        _emit(args, [f"wrote {args.out}"], {"out": args.out})
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def _sample_points(P: Polytope) -> list[tuple]:
    d = P.dim
    base = [Fraction(0)] * d
    a = [Fraction(k + 1, k + 3) for k in range(d)]
    b = [Fraction(-1, 4)] + [Fraction(1, 2)] * (d - 1)
    return [tuple(base), tuple(a), tuple(b)]


def _verify_one(name: str, P: Polytope, args, table: CellTable) -> dict:
    if name == "reciprocity":
        rep = theorems.check_maximal_cell_reciprocity(P, table)
        for v in _sample_points(P):
            g = tl_interior(P, v)
            h = reciprocity_transform(tl(P, tuple(-x for x in v)), P.dim)
            rep.add(g == h, kind="interior", v=",".join(map(exact.format_rational, v)))
        return rep.to_document()
    if name == "cs-parity":
        return theorems.check_cs_parity(P, table).to_document()
    if name == "symmetry":
        den = args.sample_denominator or max(6, 2 * P.denominator)
        verdict = theorems.check_symmetry_characterization(P, den)
        return {"check": name, "passed": verdict.consistent, "items": [verdict.to_document()]}
    if name == "projection":
        if P.dim < 2:
            raise Precondition("projection identities need d >= 2")
        rep = theorems.Report("projection")
        for i in range(1, P.dim + 1):
            for v in _sample_points(P):
                sub = theorems.check_projection_identity(P, i, v, args.t_max)
                for item in sub.items:
                    rep.add(item.pop("ok"), **item)
        return rep.to_document()
    if name == "automorphisms":
        gs = theorems.automorphisms(P, 1)
        reps = [c.representative for c in cellmod.enumerate_cells(P, cellmod.DELTA)]
        rep = theorems.Report("automorphisms")
        for g in gs:
            sub = theorems.check_automorphism_invariance(P, g, reps)
            rep.add(sub.passed, g=[list(r) for r in g])
        return rep.to_document()
    if name == "fingerprint":
        if args.other:
            try:
                others = [load(args.other)]
            except (OSError, PolytopeError) as exc:
                raise ParseError(str(exc)) from exc
        else:
            e1 = [Fraction(0)] * P.dim
            e1[0] = Fraction(1)
            half = [x / 2 for x in e1]
            others = [P.translate(e1), P.translate(half)]
        rep = theorems.Report("fingerprint")
        for Q in others:
            if Q.dim != P.dim:
                raise Precondition("fingerprint comparison needs equal dimensions")
            w = theorems.equivalent_up_to_integer_translation(P, Q)
            q = max(P.denominator, Q.denominator)
            fp = theorems.fingerprint_distinguishes(P, Q, args.sample_denominator or 4 * q, 3 * q)
            rep.add(fp.distinguishes == (w is None), other=repr(Q), integer_translate=None if w is None else list(w), **fp.to_document())
        return rep.to_document()
    if name == "minkowski":
        rep = theorems.Report("minkowski")
        for j in range(len(P.normals)):
            sub = theorems.check_codim1(P, j)
            rep.add(sub.passed, facet=list(P.normals[j]), volume=P.facets[j].relative_volume)
        return rep.to_document()
    raise ParseError(f"unknown check {name!r}")


def cmd_verify(args) -> int:
    P = _load(args)
    _enumeration_limits(P, args)
    names = [x.strip() for x in args.checks.split(",") if x.strip()] if args.checks else []
    # per-check switches add to --checks; with neither, the default pair runs
    names += [name for name in CHECKS if getattr(args, "only_" + name.replace("-", "_")) and name not in names]
    if not names:
        names = ["reciprocity", "symmetry"]
    for name in names:
        if name not in CHECKS:
            raise ParseError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    table = CellTable(P)
    results = []
    for name in names:
        try:
            results.append(_verify_one(name, P, args, table))
        except theorems.NotCentrallySymmetricOverZ as exc:
            raise Precondition(f"{name}: {exc}") from exc
    ok = all(r["passed"] for r in results)
    lines = []
    for r in results:
        lines.append(f"{r['check']}: {'PASS' if r['passed'] else 'FAIL'} ({len(r['items'])} items)")
        for item in r["items"]:
            if not item.get("ok", item.get("consistent", True)):
                lines.append(f"  failed: {json.dumps(item, sort_keys=True)}")
        if r["check"] == "symmetry":
            lines.append(f"  {json.dumps(r['items'][0], sort_keys=True)}")
    _emit(args, lines, {"passed": ok, "checks": results})
    return EXIT_OK if ok else EXIT_FAILED


def cmd_hilbert(args) -> int:
    P = _load(args)
    v = _vector(args.translate, P.dim) if args.translate else (Fraction(0),) * P.dim
    data = hilbert.hilbert_numerator(P, v)
    lines = [f"alpha {data.alpha}", f"q {data.q}", f"d {data.d}", "Q(z) " + " ".join(map(str, data.numerator))]
    _emit(args, lines, data.to_document())
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    def global_flags(suppress: bool) -> argparse.ArgumentParser:
        # subcommands accept the flags too, without overriding values given before them
        g = argparse.ArgumentParser(add_help=False)
        dflt = (lambda x: argparse.SUPPRESS) if suppress else (lambda x: x)
        g.add_argument("--format", choices=("text", "structured"), default=dflt("text"))
        g.add_argument("--max-dim", type=int, default=dflt(4))
        g.add_argument("--max-facets", type=int, default=dflt(8))
        return g

    common = global_flags(True)
    parser = argparse.ArgumentParser(prog="ehrtrans", description=__doc__.splitlines()[0], parents=[global_flags(False)])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.add_argument("polytope", help="JSON polytope file")
        p.set_defaults(func=func)
        return p

    p = add("count", cmd_count, "lattice points of tP + v")
    p.add_argument("--translate", "-v")
    p.add_argument("--dilate", "-t", type=int, default=1)

    p = add("tl", cmd_tl, "translated lattice point enumerator t -> #(tP + v)")
    p.add_argument("--translate", "-v")
    p.add_argument("--interior", action="store_true")
    p.add_argument("--minimize-period", action="store_true")

    p = add("ehrhart", cmd_ehrhart, "Ehrhart quasi-polynomial of P + v")
    p.add_argument("--translate", "-v")
    p.add_argument("--minimize-period", action="store_true")

    p = add("cells", cmd_cells, "cells of the torus decomposition")
    p.add_argument("--kind", choices=(cellmod.DELTA, cellmod.LAMBDA), default=cellmod.DELTA)

    p = add("plot", cmd_plot, "SVG of the cell decomposition (d = 2)")
    p.add_argument("--translate", "-v")
    p.add_argument("--kmax", type=int, default=0)
    p.add_argument("--out", "-o")

    p = add("verify", cmd_verify, "run theorem checks")
    p.add_argument("--checks", help="comma separated subset of: " + ", ".join(CHECKS))
    for name in CHECKS:
        p.add_argument("--" + name, dest="only_" + name.replace("-", "_"), action="store_true")
    p.add_argument("--other", help="second polytope for the fingerprint check")
    p.add_argument("--sample-denominator", type=int)
    p.add_argument("--t-max", type=int, default=6)

    p = add("hilbert", cmd_hilbert, "Hilbert series numerator")
    p.add_argument("--translate", "-v")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (Precondition, EnumerationLimitExceeded, PolytopeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
