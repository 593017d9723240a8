"""Operator norm and numerical radius on a polyhedral space.

Both quantities reduce to finite maxima: the operator norm is attained at
a vertex of the ball, and the numerical radius only needs the extreme
points of the primal and dual balls, i.e. the incident (vertex, facet)
pairs. Everything here is exhaustive enumeration — no optimization, so
the results are exact on the rational backend.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ComputationError, InputError
from .linalg import dot, identity, inverse, matmul, matvec, transpose
from .polytope import FacetFunctional, Incidence, Polytope, gauge
from .scalars import Context, EXACT, Scalar, float_context, infer_exact


class Operator:
    """A linear operator on the space, given by its d x d coordinate matrix."""

    def __init__(self, matrix, backend: Optional[str] = None, eps: Optional[float] = None):
        matrix = [tuple(row) for row in matrix]
        d = len(matrix)
        if d == 0 or any(len(row) != d for row in matrix):
            raise InputError("operator matrix must be square and nonempty")
        if backend is None:
            exact = infer_exact(matrix)
        elif backend in ("rational", "float"):
            exact = backend == "rational"
        else:
            raise InputError(f"unknown backend {backend!r}")
        self.ctx = EXACT if exact else float_context(eps)
        self.matrix = tuple(tuple(self.ctx.coerce(x) for x in row) for row in matrix)
        self.dim = d

    def __call__(self, x):
        if len(x) != self.dim:
            raise InputError(f"dimension mismatch: operator is {self.dim}x{self.dim}, "
                             f"point has {len(x)} coordinates")
        return matvec(self.matrix, x)

    def scale(self, s) -> "Operator":
        return Operator([[x * s for x in row] for row in self.matrix],
                        backend="rational" if self.ctx.exact else "float",
                        eps=None if self.ctx.exact else self.ctx.eps)

    def __repr__(self):
        return f"Operator(dim={self.dim}, matrix={self.matrix!r})"

    @classmethod
    def identity(cls, d: int, exact: bool = True) -> "Operator":
        ctx = EXACT if exact else float_context()
        return cls(identity(d, ctx), backend="rational" if exact else "float")

    @classmethod
    def zero(cls, d: int, exact: bool = True) -> "Operator":
        z = 0 if exact else 0.0
        return cls([[z] * d for _ in range(d)], backend="rational" if exact else "float")

    @classmethod
    def from_action(cls, inputs, images, ctx: Context = EXACT) -> "Operator":
        """The unique linear map sending each input vector to its image.

        ``inputs`` must be d linearly independent d-vectors; solves
        M @ inputs[i] = images[i] for the matrix M.
        """
        d = len(inputs)
        if any(len(v) != d for v in inputs) or len(images) != d or any(len(u) != d for u in images):
            raise InputError("from_action needs d independent d-vectors and d image d-vectors")
        try:
            v_inv = inverse(transpose([tuple(map(ctx.coerce, v)) for v in inputs]), ctx)
        except ComputationError as exc:
            raise ComputationError(f"input vectors are linearly dependent: {exc}") from exc
        u_cols = transpose([tuple(map(ctx.coerce, u)) for u in images])
        return cls(matmul(u_cols, v_inv), backend="rational" if ctx.exact else "float",
                   eps=None if ctx.exact else ctx.eps)


@dataclass(frozen=True)
class RadiusCertificate:
    """A (vertex, facet) incidence pair attaining the numerical radius.

    The named facet supports the named vertex (f(v) = 1) and
    ``|f(T v)| == value``.
    """

    value: Scalar
    vertex_index: int
    facet_index: int


@dataclass(frozen=True)
class ProfileRow:
    vertex_index: int
    value: Scalar
    facet_index: Optional[int]


def _check_dims(p: Polytope, op: Operator):
    if op.dim != p.dim:
        raise InputError(f"dimension mismatch: operator is {op.dim}x{op.dim}, "
                         f"space has dimension {p.dim}")


def operator_norm(p: Polytope, facets: Sequence[FacetFunctional], op: Operator):
    """(norm, attaining vertex index); the norm is max over vertices of gauge(T v).

    Ties go to the lowest vertex index.
    """
    _check_dims(p, op)
    best, best_i = None, None
    for i, v in enumerate(p.vertices):
        g = gauge(facets, op(v))
        if best is None or g > best:
            best, best_i = g, i
    return best, best_i


def numerical_radius(p: Polytope, facets: Sequence[FacetFunctional], inc: Incidence,
                     op: Operator) -> RadiusCertificate:
    """max of |f(T v)| over all incident vertex-facet pairs, with certificate.

    Pair enumeration covers every incidence; ties are broken by lowest
    (vertex index, facet index).
    """
    _check_dims(p, op)
    best = None
    for i, v in enumerate(p.vertices):
        tv = op(v)
        for k in inc.vertex_to_facets[i]:
            val = abs(dot(facets[k].coeffs, tv))
            if best is None or val > best.value:
                best = RadiusCertificate(value=val, vertex_index=i, facet_index=k)
    if best is None:
        raise ComputationError("no vertex-facet incidences; invalid polytope data")
    return best


def radius_profile(p: Polytope, facets: Sequence[FacetFunctional], inc: Incidence,
                   op: Operator) -> tuple:
    """Per-vertex table of max incident |f(T v)|; its overall max is the radius."""
    _check_dims(p, op)
    rows = []
    for i, v in enumerate(p.vertices):
        tv = op(v)
        best, best_k = None, None
        for k in inc.vertex_to_facets[i]:
            val = abs(dot(facets[k].coeffs, tv))
            if best is None or val > best:
                best, best_k = val, k
        rows.append(ProfileRow(vertex_index=i, value=best, facet_index=best_k))
    return tuple(rows)
