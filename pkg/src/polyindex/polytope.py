"""Symmetric polytopal unit balls in V-representation.

A :class:`Polytope` stores the full vertex list (antipodal pairs included)
of a symmetric, full-dimensional polytope with the origin in its interior
— the unit ball of a polyhedral norm. The H-representation is computed on
demand by :func:`facet_enumeration`: an incremental double-description
run converts the vertex half-space system into the extreme rays of its
homogenization, which after normalization are exactly the supporting
functionals of the facets, scaled so each facet lies on ``{f = 1}``.

The Minkowski gauge of the ball (the norm itself) is then the maximum of
``|f(x)|`` over the facet functionals.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ComputationError, InputError, ValidationError
from .linalg import dot, rank, vscale, vsub
from .linprog import LinearProgram, solve_lp
from .scalars import Context, EXACT, Scalar, float_context, infer_exact


class Polytope:
    """V-representation of a symmetric polytopal unit ball.

    Args:
        vertices: full vertex list, each a length-d sequence of scalars.
            Rational/int entries select the exact backend unless floats
            are present (or ``backend`` forces a choice).
        backend: "rational" or "float"; inferred from the entries if None.
        eps: comparison tolerance for the float backend (ignored when
            exact); defaults to the global configuration.
        permissive: when True, duplicate and non-extreme input points are
            stripped with a warning instead of being left in place for
            validation to reject.
    """

    def __init__(self, vertices, backend: Optional[str] = None, eps: Optional[float] = None,
                 permissive: bool = False):
        vertices = [tuple(v) for v in vertices]
        if not vertices:
            raise InputError("a polytope needs at least one vertex")
        d = len(vertices[0])
        if d < 1:
            raise InputError("vertices must have at least one coordinate")
        if any(len(v) != d for v in vertices):
            raise InputError("all vertices must have the same dimension")
        if backend is None:
            exact = infer_exact(vertices)
        elif backend in ("rational", "float"):
            exact = backend == "rational"
        else:
            raise InputError(f"unknown backend {backend!r} (expected 'rational' or 'float')")
        self.ctx = EXACT if exact else float_context(eps)
        self.vertices = tuple(tuple(self.ctx.coerce(x) for x in v) for v in vertices)
        self.dim = d
        if permissive:
            self._strip_redundant()
        self._antipode = None
        self._validated = False

    def _strip_redundant(self):
        ctx = self.ctx
        kept = []
        for v in self.vertices:
            if any(all(ctx.eq(a, b) for a, b in zip(v, w)) for w in kept):
                warnings.warn(f"dropping duplicate vertex {v}")
                continue
            kept.append(v)
        extreme = []
        for i, v in enumerate(kept):
            others = kept[:i] + kept[i + 1:]
            if others and _in_hull(v, others, ctx):
                warnings.warn(f"dropping non-extreme input point {v}")
                continue
            extreme.append(v)
        self.vertices = tuple(extreme)

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        kind = "rational" if self.ctx.exact else "float"
        return f"Polytope(dim={self.dim}, vertices={len(self.vertices)}, backend={kind})"

    def antipode_index(self, i: int) -> int:
        """Index of the vertex -v for vertex i (requires symmetry)."""
        if self._antipode is None:
            amap = []
            for v in self.vertices:
                neg = tuple(-x for x in v)
                j = self._find_vertex(neg)
                if j is None:
                    raise ValidationError([f"not symmetric: vertex {v} has no antipode"])
                amap.append(j)
            self._antipode = tuple(amap)
        return self._antipode[i]

    def _find_vertex(self, x) -> Optional[int]:
        for j, w in enumerate(self.vertices):
            if all(self.ctx.eq(a, b) for a, b in zip(x, w)):
                return j
        return None

    def orbit_representatives(self) -> tuple:
        """One vertex index per antipodal pair, the smaller index of each."""
        return tuple(i for i in range(len(self.vertices)) if i < self.antipode_index(i))


@dataclass(frozen=True)
class FacetFunctional:
    """Supporting functional of a facet, normalized so the facet lies on {f = 1}.

    ``incident_vertices`` collects the indices of the vertices v with f(v) = 1.
    """

    coeffs: tuple
    incident_vertices: frozenset

    def __call__(self, x) -> Scalar:
        return dot(self.coeffs, x)


@dataclass(frozen=True)
class Incidence:
    """Bidirectional vertex-facet incidence."""

    vertex_to_facets: tuple  # tuple of sorted tuples of facet indices
    facet_to_vertices: tuple  # tuple of sorted tuples of vertex indices


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple

    def raise_if_failed(self):
        if not self.ok:
            raise ValidationError(self.violations)


def _in_hull(x, points, ctx: Context) -> bool:
    """Is x a convex combination of the given points? (feasibility LP)"""
    n = len(points)
    d = len(x)
    eq_lhs = [[p[k] for p in points] for k in range(d)]
    eq_rhs = list(x)
    eq_lhs.append([1] * n)
    eq_rhs.append(1)
    lp = LinearProgram(objective=(0,) * n, eq_lhs=eq_lhs, eq_rhs=eq_rhs, nonneg=(True,) * n)
    return solve_lp(lp, ctx).is_optimal


def _zero_interior(p: Polytope) -> bool:
    """Is 0 an interior point? maximize s subject to sum(lam)=1, sum(lam v)=0, lam_j >= s."""
    n = len(p.vertices)
    d = p.dim
    # variables: lam_1..lam_n, s
    eq_lhs = [[v[k] for v in p.vertices] + [0] for k in range(d)]
    eq_rhs = [0] * d
    eq_lhs.append([1] * n + [0])
    eq_rhs.append(1)
    ineq_lhs = [[-1 if j == i else 0 for j in range(n)] + [1] for i in range(n)]  # s - lam_i <= 0
    ineq_rhs = [0] * n
    lp = LinearProgram(objective=(0,) * n + (-1,), ineq_lhs=ineq_lhs, ineq_rhs=ineq_rhs,
                       eq_lhs=eq_lhs, eq_rhs=eq_rhs, nonneg=(True,) * n + (False,))
    sol = solve_lp(lp, p.ctx)
    return sol.is_optimal and p.ctx.sign(-sol.value) > 0


def validate(p: Polytope) -> ValidationReport:
    """Check the unit-ball invariants, returning all violations found.

    Checks: symmetry of the vertex set, full dimensionality, extremality
    of every listed vertex (by LP against the hull of the others), and
    that 0 is an interior point.
    """
    ctx = p.ctx
    violations = []
    for i, v in enumerate(p.vertices):
        neg = tuple(-x for x in v)
        if p._find_vertex(neg) is None:
            violations.append(f"not symmetric: vertex {v} has no antipode")
    if rank(p.vertices, ctx) < p.dim:
        violations.append(f"not full-dimensional: vertices span less than {p.dim} dimensions")
    seen = set()
    for i, v in enumerate(p.vertices):
        others = [w for j, w in enumerate(p.vertices) if j != i]
        if others and _in_hull(v, others, ctx):
            key = tuple(v)
            if key not in seen:
                violations.append(f"vertex {v} is not extreme (lies in the hull of the others)")
                seen.add(key)
    if not violations and not _zero_interior(p):
        violations.append("0 is not an interior point")
    if not violations:
        p._validated = True
    return ValidationReport(ok=not violations, violations=tuple(violations))


# ---------------------------------------------------------------------------
# Double description: extreme rays of {y : row . y >= 0 for all rows}.
# ---------------------------------------------------------------------------

def _normalize_ray(ray, ctx: Context):
    if ctx.exact:
        from math import gcd
        denom = 1
        for x in ray:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        ints = [int(x * denom) for x in ray]
        g = 0
        for n in ints:
            g = gcd(g, abs(n))
        if g == 0:
            return ray
        scale = ctx.coerce(denom) / g
        return tuple(x * scale for x in ray)
    m = max(abs(x) for x in ray)
    if m == 0:
        return ray
    return tuple(x / m for x in ray)


def _double_description(rows, k: int, ctx: Context):
    """Minimal generator set of the cone {y in R^k : row . y >= 0}.

    Returns the list of extreme rays. Raises ComputationError if the cone
    contains a line (cannot happen for the bounded polars built here).
    Incremental insertion with the combinatorial adjacency test.
    """
    lineality = [tuple(1 if i == j else 0 for i in range(k)) for j in range(k)]
    lineality = [tuple(map(ctx.coerce, l)) for l in lineality]
    rays = []  # list of (vector, zeroset)

    for idx, a in enumerate(rows):
        if lineality:
            pivot = None
            for pos, l in enumerate(lineality):
                s = ctx.sign(dot(a, l))
                if s != 0:
                    pivot = pos
                    l0 = l if s > 0 else tuple(-x for x in l)
                    break
            if pivot is not None:
                al0 = dot(a, l0)
                lineality = [vsub(l, vscale(l0, dot(a, l) / al0))
                             for pos, l in enumerate(lineality) if pos != pivot]
                # Project every ray onto the new hyperplane; they all become
                # tight for this inequality, while l0 is the unique ray off it.
                rays = [(_normalize_ray(vsub(r, vscale(l0, dot(a, r) / al0)), ctx), zs | {idx})
                        for r, zs in rays]
                rays.append((_normalize_ray(l0, ctx), frozenset(range(idx))))
                continue

        plus, zero, minus = [], [], []
        for r, zs in rays:
            s = ctx.sign(dot(a, r))
            if s > 0:
                plus.append((r, zs))
            elif s == 0:
                zero.append((r, zs | {idx}))
            else:
                minus.append((r, zs))
        if not minus:
            rays = plus + zero
            continue
        zerosets = [zs for _, zs in rays]
        new = plus + zero
        for (rp, zp) in plus:
            sp = dot(a, rp)
            for (rm, zm) in minus:
                common = zp & zm
                adjacent = True
                for zs in zerosets:
                    if zs is zp or zs is zm:
                        continue
                    if common <= zs:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                sm = dot(a, rm)
                combined = tuple(sp * xm - sm * xp for xp, xm in zip(rp, rm))
                new.append((_normalize_ray(combined, ctx), (zp & zm) | {idx}))
        rays = new

    if lineality:
        raise ComputationError("cone contains a line; the input polytope cannot be full-dimensional")
    return rays


def facet_enumeration(p: Polytope) -> tuple:
    """All facets of the ball, as normalized supporting functionals.

    The vertex system ``{f : f(v) <= 1 for every vertex v}`` (the polar
    body) is homogenized to a cone in dimension d+1 whose extreme rays,
    scaled to last coordinate 1, are exactly the facet functionals. Both
    f and -f occur because the ball is symmetric. Facets are returned
    sorted by coefficient vector for deterministic reports.

    Raises:
        ValidationError: when the input violates a unit-ball invariant.
    """
    if not p._validated:
        validate(p).raise_if_failed()
    ctx = p.ctx
    d = p.dim
    rows = [tuple(-x for x in v) + (ctx.coerce(1),) for v in p.vertices]
    rays = _double_description(rows, d + 1, ctx)
    functionals = []
    for r, _ in rays:
        t = r[d]
        if ctx.sign(t) <= 0:
            raise ComputationError(f"unexpected recession ray {r} in the polar body")
        f = tuple(x / t for x in r[:d])
        incident = frozenset(i for i, v in enumerate(p.vertices) if ctx.eq(dot(f, v), 1))
        functionals.append(FacetFunctional(coeffs=f, incident_vertices=incident))
    functionals.sort(key=lambda f: f.coeffs)
    return tuple(functionals)


def incidence(p: Polytope, facets: Sequence[FacetFunctional]) -> Incidence:
    """Bidirectional vertex-facet incidence: v on facet f iff f(v) = 1."""
    v2f = [[] for _ in p.vertices]
    f2v = []
    for k, f in enumerate(facets):
        members = sorted(f.incident_vertices)
        f2v.append(tuple(members))
        for i in members:
            v2f[i].append(k)
    return Incidence(vertex_to_facets=tuple(map(tuple, v2f)), facet_to_vertices=tuple(f2v))


def gauge(facets: Sequence[FacetFunctional], x) -> Scalar:
    """The norm of x: max over facet functionals of |f(x)|.

    Zero exactly at x = 0, positively homogeneous, and equal to 1 on the
    boundary of the ball.
    """
    if not facets:
        raise InputError("gauge needs a nonempty facet list")
    if len(x) != len(facets[0].coeffs):
        raise InputError(f"dimension mismatch: point has {len(x)} coordinates, "
                         f"facets have {len(facets[0].coeffs)}")
    return max(abs(dot(f.coeffs, x)) for f in facets)


def facet_antipode_pairs(facets: Sequence[FacetFunctional], ctx: Context) -> tuple:
    """Pair each facet with its antipodal facet (-f); returns index pairs (k, k') with k <= k'."""
    pairs = []
    used = set()
    for k, f in enumerate(facets):
        if k in used:
            continue
        neg = tuple(-c for c in f.coeffs)
        partner = None
        for j in range(len(facets)):
            if j != k and j not in used and all(ctx.eq(a, b) for a, b in zip(facets[j].coeffs, neg)):
                partner = j
                break
        if partner is None:
            raise ComputationError(f"facet {f.coeffs} has no antipodal facet; ball not symmetric?")
        used.update((k, partner))
        pairs.append((k, partner))
    return tuple(pairs)
