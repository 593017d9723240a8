"""Independent oracles and random-instance generators for the test suite.

The facet oracle here deliberately re-implements hyperplane finding from
scratch (brute force over all d-subsets of vertices, with its own tiny
Gaussian solver) so it shares no code path with the library's incremental
enumeration.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction


def _solve_small(rows, rhs):
    """Gaussian elimination for the oracle; returns None when singular.

    Exact if fed Fractions, float otherwise.
    """
    d = len(rows)
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    exact = all(isinstance(x, (int, Fraction)) for r in rows for x in r)
    tol = 0 if exact else 1e-12
    for col in range(d):
        piv = None
        for i in range(col, d):
            if abs(a[i][col]) > tol:
                piv = i
                break
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(d):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return tuple(a[i][d] for i in range(d))


def brute_force_facets(vertices, tol=0.0):
    """All supporting hyperplanes {f . v = 1}: try every d-subset of
    vertices, keep the functionals with every vertex on the f <= 1 side
    and at least d tight vertices. Returns a sorted list of coefficient
    tuples (exact for rational input)."""
    vertices = [tuple(v) for v in vertices]
    d = len(vertices[0])
    found = []
    for subset in itertools.combinations(range(len(vertices)), d):
        rows = [vertices[i] for i in subset]
        f = _solve_small(rows, [1] * d)
        if f is None:
            continue
        vals = [sum(c * x for c, x in zip(f, v)) for v in vertices]
        if all(val <= 1 + tol for val in vals):
            if not any(all(abs(a - b) <= max(tol, 1e-12) for a, b in zip(f, g)) for g in found):
                found.append(tuple(f))
    return sorted(found)


def vertex_set(p):
    return frozenset(tuple(v) for v in p.vertices)


def random_symmetric_polytope(rng, dim, n_pairs, bound=5, cls=None):
    """Hull of random integer points and their antipodes, stripped to its
    extreme points; resamples until full-dimensional and valid."""
    from polyindex import Polytope, validate
    import warnings
    cls = cls or Polytope
    while True:
        pts = []
        for _ in range(n_pairs):
            v = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(dim))
            if all(x == 0 for x in v):
                continue
            pts.append(v)
            pts.append(tuple(-x for x in v))
        if len(pts) < 2 * dim:
            continue
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            p = cls(pts, backend="rational", permissive=True)
        if len(p.vertices) >= 2 * dim and validate(p).ok:
            return p


def random_rational_matrix(rng, d, bound=4, denom=3):
    return [[Fraction(rng.randint(-bound, bound), rng.randint(1, denom)) for _ in range(d)]
            for _ in range(d)]


def boundary_minimax_2d(polygon, functionals, n_points):
    """Sampling oracle for 2-D per-vertex bounds: distribute n_points over
    the polygon's edges (in vertex-adjacency order) and return the minimum
    over samples of max_r |f_r(x)|."""
    import numpy as np
    verts = np.array([[float(x) for x in v] for v in polygon.vertices])
    funcs = np.array([[float(c) for c in f] for f in functionals])
    order = np.argsort(np.arctan2(verts[:, 1], verts[:, 0]))
    ring = verts[order]
    k = len(ring)
    per_edge = max(n_points // k, 2)
    best = math.inf
    for i in range(k):
        a, b = ring[i], ring[(i + 1) % k]
        t = np.linspace(0.0, 1.0, per_edge, endpoint=False)
        pts = a[None, :] + t[:, None] * (b - a)[None, :]
        vals = np.abs(pts @ funcs.T).max(axis=1)
        best = min(best, float(vals.min()))
    return best
