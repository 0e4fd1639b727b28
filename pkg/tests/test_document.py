import json

import pytest

from stacky.cli import document
from stacky.data import asset_path
from stacky.delzant.delzant_data import compile as compile_delzant
from stacky.error.value_error.document_error import DocumentError


def raw(name: str) -> dict:
    return json.loads(asset_path(name).read_text(encoding="utf-8"))


def test_emit_is_canonical(irrational_doc):
    text = document.emit(irrational_doc)
    again = document.parse(text)
    assert document.emit(again) == text
    assert again.decorated.quasilattice.gen_matrix == irrational_doc.decorated.quasilattice.gen_matrix
    assert again.decorated.offsets == irrational_doc.decorated.offsets
    assert again.family.end.gen_matrix == irrational_doc.family.end.gen_matrix

def test_rationals_are_written_as_fractions(triangle):
    text = document.emit(document.Document(triangle))
    assert '"1/1"' in text
    assert "deformation" not in text
    assert "notes" not in text

def test_notes_are_carried_through(irrational_doc):
    assert irrational_doc.notes["expected"]["isotropy_f2"] == "Z"
    assert json.loads(document.emit(irrational_doc))["notes"] == irrational_doc.notes

def test_short_coefficient_lists_are_padded():
    data = raw("irrational_triangle")
    data["facets"][2]["offset"] = ["1"]
    doc = document.parse(json.dumps(data))
    assert doc.decorated.offsets[2] == 1

def test_unknown_key():
    data = raw("triangle")
    data["colour"] = "red"
    with pytest.raises(DocumentError) as e:
        document.parse(json.dumps(data))
    assert e.value.path.endswith(".colour")

def test_missing_key():
    data = raw("triangle")
    del data["facets"]
    with pytest.raises(DocumentError):
        document.parse(json.dumps(data))

def test_floats_are_rejected():
    data = raw("triangle")
    data["facets"][2]["offset"] = [1.0]
    with pytest.raises(DocumentError) as e:
        document.parse(json.dumps(data))
    assert "facets[2].offset[0]" in e.value.path

@pytest.mark.parametrize("offset", ["1/0", "1/00", "3/000"])
def test_zero_denominators_are_rejected(offset):
    data = raw("triangle")
    data["facets"][2]["offset"] = [offset]
    with pytest.raises(DocumentError) as e:
        document.parse(json.dumps(data))
    assert "facets[2].offset[0]" in e.value.path

@pytest.mark.parametrize("min_poly, interval", [
    ([-1, 0, 1], ["1/2", "3/2"]),
    ([-2, 0, 1], ["-2/1", "2/1"]),
    ([-2, 0, 1], ["3/2", "2/1"]),
])
def test_bad_fields_are_document_errors(min_poly, interval):
    data = raw("irrational_triangle")
    data["field"] = {"min_poly": min_poly, "root_interval": interval}
    with pytest.raises(DocumentError) as e:
        document.parse(json.dumps(data))
    assert e.value.path.endswith(".field")

def test_marker_length_is_checked():
    data = raw("triangle")
    data["facets"][0]["marker"] = [1, 0, 0]
    with pytest.raises(DocumentError):
        document.parse(json.dumps(data))

def test_deformation_shape_is_checked():
    data = raw("shrinking_triangle")
    data["deformation"]["end_offsets"] = data["deformation"]["end_offsets"][:2]
    with pytest.raises(DocumentError):
        document.parse(json.dumps(data))

@pytest.mark.parametrize("text", ["{", "[]", '"triangle"'])
def test_invalid_json(text):
    with pytest.raises(DocumentError):
        document.parse(text)

def test_missing_file(tmp_path):
    with pytest.raises(DocumentError):
        document.load(str(tmp_path / "missing.json"))

def test_delzant_json(triangle):
    out = document.delzant_to_json(compile_delzant(triangle))
    assert out["d"] == 3
    assert out["kernel_basis"] == [[["1/1"], ["1/1"], ["1/1"]]]
    assert out["quadrics"][0]["rhs"] == ["1/1"]
    assert [v["active_set"] for v in out["vertices"]] == [[1, 2], [1, 3], [2, 3]]
