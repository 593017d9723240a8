from fractions import Fraction

import pytest

from polyindex import InputError, Operator
from polyindex.documents import (operator_from_document, operator_to_document,
                                 polytope_from_document, polytope_to_document)
from polyindex.families import oblique_prism, pyramid_witness_operator
from helpers import vertex_set


def test_rational_round_trip_is_identity(hexagon):
    doc = polytope_to_document(hexagon)
    assert doc["scalar"] == "rational"
    p, w = polytope_from_document(doc)
    assert w is None
    assert vertex_set(p) == vertex_set(hexagon)
    # parse -> serialize -> parse fixed point
    assert polytope_to_document(p) == doc


def test_rational_entries_serialize_as_strings_or_ints(hexagon):
    doc = polytope_to_document(hexagon)
    flat = [x for row in doc["vertices"] for x in row]
    assert "1/2" in flat and 1 in flat
    assert not any(isinstance(x, float) for x in flat)


def test_float_round_trip():
    p = oblique_prism(3, 0.5)
    doc = polytope_to_document(p)
    assert doc["scalar"] == "float"
    q, _ = polytope_from_document(doc)
    assert q.vertices == p.vertices


def test_embedded_witness_round_trip(bipyramid):
    w = pyramid_witness_operator()
    doc = polytope_to_document(bipyramid, witness=w)
    p, w2 = polytope_from_document(doc)
    assert w2 is not None and w2.matrix == w.matrix


def test_operator_round_trip():
    op = Operator([[Fraction(1, 3), 0], [2, Fraction(-5, 7)]])
    doc = operator_to_document(op)
    assert operator_from_document(doc).matrix == op.matrix


@pytest.mark.parametrize("mutate, field", [
    (lambda d: d.pop("dim"), "dim"),
    (lambda d: d.update(dim=0), "dim"),
    (lambda d: d.update(scalar="decimal"), "scalar"),
    (lambda d: d.update(vertices=[]), "vertices"),
    (lambda d: d["vertices"][0].pop(), "vertices[0]"),
    (lambda d: d["vertices"][2].__setitem__(0, 0.5), "vertices[2][0]"),
    (lambda d: d["vertices"][1].__setitem__(1, "3/0"), "vertices[1][1]"),
])
def test_malformed_polytope_documents_name_the_field(hexagon, mutate, field):
    doc = polytope_to_document(hexagon)
    mutate(doc)
    with pytest.raises(InputError) as exc:
        polytope_from_document(doc)
    assert field in str(exc.value)


def test_float_document_rejects_strings():
    doc = {"dim": 2, "scalar": "float", "vertices": [["1/2", 1.0], [-0.5, -1.0]]}
    with pytest.raises(InputError, match="vertices"):
        polytope_from_document(doc)


def test_rational_document_rejects_floats():
    doc = {"dim": 1, "scalar": "rational", "vertices": [[0.5], [-0.5]]}
    with pytest.raises(InputError, match="rational"):
        polytope_from_document(doc)


def test_witness_dimension_checked(hexagon):
    doc = polytope_to_document(hexagon, witness=pyramid_witness_operator())
    with pytest.raises(InputError, match="witness"):
        polytope_from_document(doc)


def test_malformed_operator_documents():
    with pytest.raises(InputError, match="matrix"):
        operator_from_document({"dim": 2, "scalar": "rational", "matrix": [[1, 0]]})
    with pytest.raises(InputError, match="matrix\\[1\\]"):
        operator_from_document({"dim": 2, "scalar": "rational", "matrix": [[1, 0], [1]]})
