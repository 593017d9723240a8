"""JSON document formats for polytopes and operators.

Rational scalars serialize as integers or "p/q" strings so that the
rational backend round-trips losslessly; float scalars serialize as JSON
numbers. A polytope document may embed a witness operator document under
the "witness" key so that a single stream pipes from the family generator
into the bound command.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Tuple

from .errors import InputError
from .operators import Operator
from .polytope import Polytope
from .scalars import Scalar, format_rational, parse_rational

RATIONAL = "rational"
FLOAT = "float"


def scalar_to_json(x: Scalar):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else format_rational(x)
    return float(x)


def _scalar_from_json(value, kind: str, where: str):
    if kind == RATIONAL:
        if isinstance(value, bool) or isinstance(value, float):
            raise InputError(f"{where}: rational documents take integers or 'p/q' strings, "
                             f"got {value!r}")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return parse_rational(value)
            except InputError as exc:
                raise InputError(f"{where}: {exc}") from exc
        raise InputError(f"{where}: expected integer or rational string, got {type(value).__name__}")
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InputError(f"{where}: float documents take numbers, got {value!r}")
    return float(value)


def _check_header(doc, what: str) -> Tuple[int, str]:
    if not isinstance(doc, dict):
        raise InputError(f"{what}: expected a JSON object, got {type(doc).__name__}")
    dim = doc.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputError(f"{what}.dim: expected a positive integer, got {dim!r}")
    kind = doc.get("scalar")
    if kind not in (RATIONAL, FLOAT):
        raise InputError(f"{what}.scalar: expected 'rational' or 'float', got {kind!r}")
    return dim, kind


def polytope_to_document(p: Polytope, witness: Optional[Operator] = None) -> dict:
    doc = {
        "dim": p.dim,
        "scalar": RATIONAL if p.ctx.exact else FLOAT,
        "vertices": [[scalar_to_json(x) for x in v] for v in p.vertices],
    }
    if witness is not None:
        doc["witness"] = operator_to_document(witness)
    return doc


def polytope_from_document(doc, eps: Optional[float] = None,
                           permissive: bool = False) -> Tuple[Polytope, Optional[Operator]]:
    dim, kind = _check_header(doc, "polytope")
    verts = doc.get("vertices")
    if not isinstance(verts, list) or not verts:
        raise InputError("polytope.vertices: expected a nonempty array")
    parsed = []
    for i, row in enumerate(verts):
        if not isinstance(row, list) or len(row) != dim:
            raise InputError(f"polytope.vertices[{i}]: expected an array of length {dim}")
        parsed.append([_scalar_from_json(x, kind, f"polytope.vertices[{i}][{j}]")
                       for j, x in enumerate(row)])
    p = Polytope(parsed, backend=kind, eps=eps, permissive=permissive)
    witness = None
    if "witness" in doc and doc["witness"] is not None:
        witness = operator_from_document(doc["witness"], eps=eps)
        if witness.dim != dim:
            raise InputError("witness.dim: does not match polytope.dim")
    return p, witness


def operator_to_document(op: Operator) -> dict:
    return {
        "dim": op.dim,
        "scalar": RATIONAL if op.ctx.exact else FLOAT,
        "matrix": [[scalar_to_json(x) for x in row] for row in op.matrix],
    }


def operator_from_document(doc, eps: Optional[float] = None) -> Operator:
    dim, kind = _check_header(doc, "operator")
    matrix = doc.get("matrix")
    if not isinstance(matrix, list) or len(matrix) != dim:
        raise InputError(f"operator.matrix: expected an array of {dim} rows")
    parsed = []
    for i, row in enumerate(matrix):
        if not isinstance(row, list) or len(row) != dim:
            raise InputError(f"operator.matrix[{i}]: expected an array of length {dim}")
        parsed.append([_scalar_from_json(x, kind, f"operator.matrix[{i}][{j}]")
                       for j, x in enumerate(row)])
    return Operator(parsed, backend=kind, eps=eps)
