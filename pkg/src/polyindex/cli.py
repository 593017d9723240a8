"""Command-line interface.

Subcommands operate on JSON polytope/operator documents (see documents.py)
read from files or stdin ("-"), and emit a JSON report (default) or an
aligned text rendering. Exit codes: 0 success, 1 computational failure,
2 input error.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from . import __version__
from .bracket import SearchConfig, index_bracket, lower_bound
from .documents import (operator_from_document, operator_to_document,
                        polytope_from_document, polytope_to_document, scalar_to_json)
from .errors import InputError, PolyindexError
from .families import FAMILIES, linf_sum, scale_coordinate
from .operators import numerical_radius, operator_norm, radius_profile
from .polytope import facet_enumeration, gauge, incidence
from .scalars import parse_rational

THREADS_ENV_VAR = "POLYINDEX_THREADS"


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is not None:
        try:
            return max(int(raw), 1)
        except ValueError as exc:
            raise InputError(f"{THREADS_ENV_VAR}: not an integer: {raw!r}") from exc
    return os.cpu_count() or 1


def _read_json(path: str, what: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"{what}: cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: {path} is not valid JSON: {exc}") from exc


def _render_text(value, indent=0, out=None):
    pad = "  " * indent
    lines = out if out is not None else []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _is_flat_list(v):
                lines.append(f"{pad}{k}:")
                _render_text(v, indent + 1, lines)
            else:
                lines.append(f"{pad}{k}: {_flat(v)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and item and not _is_flat_list(item):
                lines.append(f"{pad}-")
                _render_text(item, indent + 1, lines)
            else:
                lines.append(f"{pad}- {_flat(item)}")
    else:
        lines.append(f"{pad}{_flat(value)}")
    return lines


def _is_flat_list(v):
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _flat(v):
    if isinstance(v, list):
        return "[" + ", ".join(str(x) for x in v) + "]"
    return str(v)


def _emit(report, fmt: str):
    if fmt == "text":
        print("\n".join(_render_text(report)))
    else:
        print(json.dumps(report, indent=2))


def _report(command: str, config: dict, results: dict) -> dict:
    return {"command": command, "config": config, "results": results}


def _vector_json(vec):
    return [scalar_to_json(x) for x in vec]


def _load_polytope(args, permissive=False):
    doc = _read_json(args.input, "input")
    return polytope_from_document(doc, eps=args.eps, permissive=permissive)


def _config(args, **extra):
    cfg = {"eps": args.eps, "threads": getattr(args, "threads", 1)}
    cfg.update(extra)
    return cfg


def cmd_hull(args) -> int:
    p, _ = _load_polytope(args)
    facets = facet_enumeration(p)
    inc = incidence(p, facets)
    results = {
        "dim": p.dim,
        "facet_count": len(facets),
        "facets": [_vector_json(f.coeffs) for f in facets],
        "vertex_to_facets": [list(t) for t in inc.vertex_to_facets],
        "facet_to_vertices": [list(t) for t in inc.facet_to_vertices],
    }
    _emit(_report("hull", _config(args), results), args.format)
    return 0


def cmd_dual(args) -> int:
    p, _ = _load_polytope(args)
    facets = facet_enumeration(p)
    results = {"dim": p.dim, "vertices": [_vector_json(f.coeffs) for f in facets]}
    _emit(_report("dual", _config(args), results), args.format)
    return 0


def cmd_norm(args) -> int:
    p, _ = _load_polytope(args)
    point = _parse_point(args.point, p)
    facets = facet_enumeration(p)
    value = gauge(facets, point)
    results = {"point": _vector_json(point), "value": scalar_to_json(value)}
    _emit(_report("norm", _config(args), results), args.format)
    return 0


def _parse_point(text: str, p) -> tuple:
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != p.dim:
        raise InputError(f"point: expected {p.dim} comma-separated coordinates, got {len(parts)}")
    if p.ctx.exact:
        return tuple(parse_rational(t) for t in parts)
    try:
        return tuple(float(t) for t in parts)
    except ValueError as exc:
        raise InputError(f"point: not a number: {exc}") from exc


def cmd_radius(args) -> int:
    p, embedded = _load_polytope(args)
    if args.operator:
        op = operator_from_document(_read_json(args.operator, "operator"), eps=args.eps)
    elif embedded is not None:
        op = embedded
    else:
        raise InputError("radius: needs --operator FILE or a polytope document with a witness")
    facets = facet_enumeration(p)
    inc = incidence(p, facets)
    norm, norm_vertex = operator_norm(p, facets, op)
    cert = numerical_radius(p, facets, inc, op)
    profile = radius_profile(p, facets, inc, op)
    results = {
        "operator_norm": scalar_to_json(norm),
        "norm_vertex": norm_vertex,
        "numerical_radius": scalar_to_json(cert.value),
        "radius_vertex": cert.vertex_index,
        "radius_facet": cert.facet_index,
        "profile": [{"vertex": r.vertex_index, "value": scalar_to_json(r.value),
                     "facet": r.facet_index} for r in profile],
    }
    _emit(_report("radius", _config(args), results), args.format)
    return 0


def cmd_bound(args) -> int:
    p, embedded = _load_polytope(args)
    facets = facet_enumeration(p)
    inc = incidence(p, facets)
    witnesses = [operator_from_document(_read_json(path, "witness"), eps=args.eps)
                 for path in args.witness or []]
    if not witnesses and embedded is not None:
        witnesses = [embedded]
    subsets = None
    if args.policy == "subset":
        subsets = {i: tuple(inc.vertex_to_facets[i][: p.dim])
                   for i in p.orbit_representatives()}
    search = SearchConfig(budget=args.search, seed=args.seed) if args.search else None
    bracket = index_bracket(p, facets, inc, witnesses=witnesses, search=search,
                            subsets=subsets, threads=args.threads)
    results = {
        "vertex_bounds": [{
            "vertex": e.vertex_index,
            "antipode": e.antipode_index,
            "value": scalar_to_json(e.value),
            "functionals": list(e.functional_indices),
            "sphere_facet": e.sphere_facet_index,
            "minimizer": _vector_json(e.minimizer),
        } for e in bracket.lower_certificate.entries],
        "lower": scalar_to_json(bracket.lower),
        "upper": scalar_to_json(bracket.upper),
        "status": bracket.status,
        "witness": operator_to_document(bracket.witness),
        "radius_certificate": {
            "value": scalar_to_json(bracket.radius_certificate.value),
            "vertex": bracket.radius_certificate.vertex_index,
            "facet": bracket.radius_certificate.facet_index,
        },
    }
    config = _config(args, policy=args.policy, search_budget=args.search, seed=args.seed)
    _emit(_report("bound", config, results), args.format)
    return 0


def cmd_family(args) -> int:
    kind = args.kind
    if kind == "linf_sum":
        if not args.a or not args.b:
            raise InputError("family linf_sum: needs --a FILE and --b FILE polytope documents")
        pa, _ = polytope_from_document(_read_json(args.a, "--a"), eps=args.eps)
        pb, _ = polytope_from_document(_read_json(args.b, "--b"), eps=args.eps)
        p = linf_sum(pa, pb)
        witness = None
    else:
        if kind not in FAMILIES:
            raise InputError(f"unknown family {kind!r}; choose from "
                             f"{sorted(FAMILIES) + ['linf_sum']}")
        entry = FAMILIES[kind]
        if entry["needs_n"] and args.n is None:
            raise InputError(f"family {kind}: needs --n")
        l = parse_rational(args.l) if args.l is not None else Fraction(0)
        p = entry["builder"](args.n, float(l))
        witness = None
        if args.with_witness:
            if entry["witness"] is None:
                raise InputError(f"family {kind}: no sharp witness operator is known")
            witness = entry["witness"](args.n, float(l))
    if args.height is not None:
        h = parse_rational(args.height)
        if p.dim < 3:
            raise InputError("--height: only meaningful for prism families")
        axis = p.dim - 1
        p = scale_coordinate(p, axis, h if p.ctx.exact else float(h))
        if witness is not None:
            # Conjugate the witness by the rescaling so it stays sharp:
            # row `axis` scales by h, column `axis` by 1/h.
            hf = float(h)
            m = [list(row) for row in witness.matrix]
            for j in range(len(m)):
                m[axis][j] *= hf
                m[j][axis] /= hf
            witness = type(witness)(m, backend="float")
    doc = polytope_to_document(p, witness=witness)
    text = json.dumps(doc, indent=2)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def _verify_checks():
    """The self-contained reproduction suite; yields check dicts."""
    checks = []

    def add(case, quantity, expected, computed, ok):
        checks.append({"case": case, "quantity": quantity, "expected": expected,
                       "computed": computed, "pass": bool(ok)})

    # Irregular hexagon: exact per-vertex bounds and the lower bound.
    from .families import bipyramid_square_prism, irregular_hexagon, oblique_prism, \
        prism_with_pyramids, prism_with_pyramids_witness, prism_witness_operator, \
        pyramid_witness_operator
    hexagon = irregular_hexagon()
    facets = facet_enumeration(hexagon)
    inc = incidence(hexagon, facets)
    lo, cert = lower_bound(hexagon, facets, inc)
    expected = [Fraction(5, 17), Fraction(4, 7), Fraction(9, 13)]
    values = [e.value for e in cert.entries]
    for i, (want, got) in enumerate(zip(expected, values)):
        add("irregular_hexagon", f"vertex_bound[{i}]", scalar_to_json(want),
            scalar_to_json(got), want == got)
    add("irregular_hexagon", "lower_bound", "5/17", scalar_to_json(lo),
        lo == Fraction(5, 17))
    dual_vertices = {f.coeffs for f in facets}
    target = (Fraction(2, 3), Fraction(1, 3))
    add("irregular_hexagon", "dual_vertex (2/3, 1/3)", True, target in dual_vertices,
        target in dual_vertices)

    # Rational bipyramid solid: exact tight bracket at 1/2.
    bp = bipyramid_square_prism()
    bfacets = facet_enumeration(bp)
    binc = incidence(bp, bfacets)
    witness = pyramid_witness_operator()
    wnorm, _ = operator_norm(bp, bfacets, witness)
    add("bipyramid_square_prism", "witness_norm", "1", scalar_to_json(wnorm),
        wnorm == Fraction(1))
    bracket = index_bracket(bp, bfacets, binc, witnesses=[witness])
    add("bipyramid_square_prism", "lower_bound", "1/2", scalar_to_json(bracket.lower),
        bracket.lower == Fraction(1, 2))
    add("bipyramid_square_prism", "witness_radius", "1/2",
        scalar_to_json(bracket.radius_certificate.value),
        bracket.radius_certificate.value == Fraction(1, 2))
    add("bipyramid_square_prism", "status", "tight", bracket.status,
        bracket.status == "tight" and bracket.upper == Fraction(1, 2))

    # Prism families: bracket endpoints hit sin/tan(pi/2n) within 1e-7.
    tol = 1e-7
    for n in (2, 3, 4, 5):
        want = math.sin(math.pi / (2 * n)) if n % 2 else math.tan(math.pi / (2 * n))
        for l in (0.0, 0.5):
            p = oblique_prism(n, l)
            bracket = index_bracket(p, witnesses=[prism_witness_operator(n, l)])
            ok = abs(bracket.lower - want) < tol and abs(bracket.upper - want) < tol
            add(f"oblique_prism(n={n}, l={l})", "bracket", want,
                [bracket.lower, bracket.upper], ok)

    # Pyramided prisms, n = 3 and 4.
    for n in (3, 4):
        want = math.sin(math.pi / (2 * n)) if n % 2 else math.tan(math.pi / (2 * n))
        p = prism_with_pyramids(n)
        bracket = index_bracket(p, witnesses=[prism_with_pyramids_witness(n)])
        ok = abs(bracket.lower - want) < tol and abs(bracket.upper - want) < tol
        add(f"prism_with_pyramids(n={n})", "bracket", want,
            [bracket.lower, bracket.upper], ok)

    return checks


def cmd_verify(args) -> int:
    checks = _verify_checks()
    passed = all(c["pass"] for c in checks)
    results = {"checks": checks, "passed": passed,
               "summary": f"{sum(c['pass'] for c in checks)}/{len(checks)} checks passed"}
    _emit(_report("verify", _config(args), results), args.format)
    return 0 if passed else 1


def _add_common(sp, with_input=True):
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.add_argument("--eps", type=float, default=None,
                    help="float-backend comparison tolerance (default 1e-9 or POLYINDEX_EPS)")
    sp.add_argument("--threads", type=int, default=None,
                    help="parallelism bound (default: available parallelism or POLYINDEX_THREADS)")
    if with_input:
        sp.add_argument("--input", "-i", default="-", help="polytope document path or - for stdin")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyindex",
        description="Facets, polar duals, operator norms, numerical radii and certified "
                    "numerical-index brackets for symmetric polytopal unit balls.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("hull", help="facet enumeration and vertex-facet incidence")
    _add_common(sp)
    sp.set_defaults(func=cmd_hull)

    sp = sub.add_parser("dual", help="vertices of the polar unit ball")
    _add_common(sp)
    sp.set_defaults(func=cmd_dual)

    sp = sub.add_parser("norm", help="gauge (norm) of a point")
    _add_common(sp)
    sp.add_argument("--point", required=True, help="comma-separated coordinates, e.g. '1/2,2'")
    sp.set_defaults(func=cmd_norm)

    sp = sub.add_parser("radius", help="operator norm and numerical radius of an operator")
    _add_common(sp)
    sp.add_argument("--operator", help="operator document path")
    sp.set_defaults(func=cmd_radius)

    sp = sub.add_parser("bound", help="certified two-sided bracket on the numerical index")
    _add_common(sp)
    sp.add_argument("--witness", action="append", help="witness operator document (repeatable)")
    sp.add_argument("--search", type=int, default=0,
                    help="budget of objective evaluations for the local search (default off)")
    sp.add_argument("--policy", choices=("all", "subset"), default="all",
                    help="functionals per vertex: all incident facets, or the first d")
    sp.add_argument("--seed", type=int, default=0, help="seed for the local search")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("family", help="generate a built-in family member document")
    sp.add_argument("kind", help=f"one of {sorted(FAMILIES) + ['linf_sum']}")
    sp.add_argument("--n", type=int, help="half the base vertex count")
    sp.add_argument("--l", help="shear parameter (rational or decimal)")
    sp.add_argument("--height", help="rescale the last coordinate by this factor")
    sp.add_argument("--with-witness", action="store_true",
                    help="embed the family's sharp witness operator")
    sp.add_argument("--a", help="linf_sum: first summand polytope document")
    sp.add_argument("--b", help="linf_sum: second summand polytope document")
    sp.add_argument("--eps", type=float, default=None)
    sp.add_argument("--output", "-o", default="-")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("verify", help="run the built-in reproduction suite")
    _add_common(sp, with_input=False)
    sp.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", None) is None:
        args.threads = _default_threads()
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PolyindexError as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
