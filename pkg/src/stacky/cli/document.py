"""
The JSON document format shared by every subcommand.

    {
      "field": {"min_poly": [-2, 0, 1], "root_interval": ["1/1", "3/2"]},
      "quasilattice": {"torsion": [], "generators": [[elem, ...], ...]},   # n rows, m columns
      "facets": [{"marker": [1, 0, 0], "offset": elem}, ...],
      "deformation": {"end_generators": [[elem, ...], ...], "end_offsets": [elem, ...]},
      "notes": {...}
    }

A field element (elem) is the list of its rational coefficients in 1, α, α^2, ...,
    written as "p/q" strings. "deformation" and "notes" are optional.
"""
from __future__ import annotations
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence
import json

from ..decorated.decorated_polytope import DecoratedPolytope
from ..deformation.family import DeformationFamily
from ..delzant.delzant_data import DelzantData
from ..delzant.vertex_check import VertexCheck
from ..error.value_error.document_error import DocumentError
from ..error.value_error.invalid_field_error import InvalidFieldError
from ..quasilattice.quasilattice import Quasilattice
from ..scalar.field import FieldElement, RealAlgebraicField
from ..scalar.matrix import FieldMatrix
from ..utils.rational import format_rational, is_rational, parse_rational

TOP_KEYS = ("field", "quasilattice", "facets", "deformation", "notes")
REQUIRED_KEYS = ("field", "quasilattice", "facets")


@dataclass
class Document:
    """
    A parsed document.

    Fields:
        decorated (DecoratedPolytope): the datum at τ = 0.
        family (Optional[DeformationFamily]): present when the document has a deformation section.
        notes (Dict[str, Any]): free-form notes, carried through unchanged.
    """
    decorated: DecoratedPolytope
    family: Optional[DeformationFamily] = None
    notes: Dict[str, Any] = field(default_factory=dict)

    @property
    def field(self) -> RealAlgebraicField:
        return self.decorated.field


def _expect(condition: bool, path: str, message: str) -> None:
    if not condition:
        raise DocumentError(path, message)

def _check_keys(obj: Any, allowed: Sequence[str], required: Sequence[str], path: str) -> None:
    _expect(isinstance(obj, dict), path, "expected an object")
    for key in obj:
        _expect(key in allowed, f"{path}.{key}", "unknown key")
    for key in required:
        _expect(key in obj, f"{path}.{key}", "missing key")

def _rational(x: Any, path: str) -> Fraction:
    _expect(is_rational(x), path, f"expected a rational 'p/q', got {x!r}")
    return parse_rational(x)

def _int(x: Any, path: str) -> int:
    _expect(isinstance(x, int) and not isinstance(x, bool), path, f"expected an integer, got {x!r}")
    return x

def _list(x: Any, path: str) -> List[Any]:
    _expect(isinstance(x, list), path, "expected a list")
    return x

def _element(x: Any, fld: RealAlgebraicField, path: str) -> FieldElement:
    coeffs = [_rational(c, f"{path}[{i}]") for i, c in enumerate(_list(x, path))]
    _expect(0 < len(coeffs) <= fld.degree, path, f"expected 1 to {fld.degree} coefficients, got {len(coeffs)}")
    return fld.element(coeffs)

def _matrix(x: Any, fld: RealAlgebraicField, path: str) -> FieldMatrix:
    rows = [[_element(a, fld, f"{path}[{i}][{j}]") for j, a in enumerate(_list(row, f"{path}[{i}]"))]
            for i, row in enumerate(_list(x, path))]
    _expect(len(rows) > 0, path, "expected at least one row")
    _expect(len({len(row) for row in rows}) == 1, path, "rows have different lengths")
    return FieldMatrix.from_rows(fld, rows)


def parse(text: str, path: str = "<document>") -> Document:
    """
    Parses a document.

    Raises:
        DocumentError: malformed JSON, unknown or missing keys, wrong types, non-exact numbers,
            or a field whose minimal polynomial and root interval do not define one.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(path, f"invalid JSON: {e}")
    _check_keys(raw, TOP_KEYS, REQUIRED_KEYS, path)

    _check_keys(raw["field"], ("min_poly", "root_interval"), ("min_poly", "root_interval"), f"{path}.field")
    min_poly = [_int(c, f"{path}.field.min_poly[{i}]") for i, c in enumerate(_list(raw["field"]["min_poly"], f"{path}.field.min_poly"))]
    interval = [_rational(x, f"{path}.field.root_interval[{i}]")
                for i, x in enumerate(_list(raw["field"]["root_interval"], f"{path}.field.root_interval"))]
    _expect(len(interval) == 2, f"{path}.field.root_interval", "expected two endpoints")
    try:
        fld = RealAlgebraicField(tuple(min_poly), (interval[0], interval[1]))
    except InvalidFieldError as e:
        raise DocumentError(f"{path}.field", str(e))

    _check_keys(raw["quasilattice"], ("torsion", "generators"), ("generators",), f"{path}.quasilattice")
    torsion = [_int(d, f"{path}.quasilattice.torsion[{i}]")
               for i, d in enumerate(_list(raw["quasilattice"].get("torsion", []), f"{path}.quasilattice.torsion"))]
    gen = _matrix(raw["quasilattice"]["generators"], fld, f"{path}.quasilattice.generators")
    quasilattice = Quasilattice(tuple(torsion), gen)

    markers, offsets = [], []
    for i, facet in enumerate(_list(raw["facets"], f"{path}.facets")):
        where = f"{path}.facets[{i}]"
        _check_keys(facet, ("marker", "offset"), ("marker", "offset"), where)
        marker = [_int(x, f"{where}.marker[{j}]") for j, x in enumerate(_list(facet["marker"], f"{where}.marker"))]
        _expect(len(marker) == gen.ncols, f"{where}.marker", f"expected {gen.ncols} entries")
        markers.append(tuple(marker))
        offsets.append(_element(facet["offset"], fld, f"{where}.offset"))
    decorated = DecoratedPolytope(quasilattice, tuple(markers), tuple(offsets))

    family = None
    if "deformation" in raw:
        where = f"{path}.deformation"
        _check_keys(raw["deformation"], ("end_generators", "end_offsets"), ("end_generators", "end_offsets"), where)
        end_gen = _matrix(raw["deformation"]["end_generators"], fld, f"{where}.end_generators")
        _expect(end_gen.shape == gen.shape, f"{where}.end_generators", f"expected shape {gen.shape}")
        end_offsets = [_element(x, fld, f"{where}.end_offsets[{i}]")
                       for i, x in enumerate(_list(raw["deformation"]["end_offsets"], f"{where}.end_offsets"))]
        _expect(len(end_offsets) == len(offsets), f"{where}.end_offsets", f"expected {len(offsets)} entries")
        family = DeformationFamily(quasilattice, Quasilattice(tuple(torsion), end_gen), tuple(markers),
                                   tuple(zip(offsets, end_offsets)))

    notes = raw.get("notes", {})
    _expect(isinstance(notes, dict), f"{path}.notes", "expected an object")
    return Document(decorated, family, notes)


def load(path: str) -> Document:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(path, f"cannot read: {e.strerror}")
    return parse(text, path)


def element_to_json(a: FieldElement) -> List[str]:
    return [format_rational(c) for c in a.coeffs]

def matrix_to_json(M: FieldMatrix) -> List[List[List[str]]]:
    return [[element_to_json(a) for a in row] for row in M.rows]

def field_to_json(fld: RealAlgebraicField) -> Dict[str, Any]:
    return {"min_poly": list(fld.min_poly), "root_interval": [format_rational(x) for x in fld.root_interval]}


def to_json(doc: Document) -> Dict[str, Any]:
    D = doc.decorated
    out: Dict[str, Any] = {
        "field": field_to_json(D.field),
        "quasilattice": {"torsion": list(D.quasilattice.torsion),
                         "generators": matrix_to_json(D.quasilattice.gen_matrix)},
        "facets": [{"marker": list(q), "offset": element_to_json(L)} for q, L in zip(D.markers, D.offsets)],
    }
    if doc.family is not None:
        out["deformation"] = {"end_generators": matrix_to_json(doc.family.end.gen_matrix),
                              "end_offsets": [element_to_json(b) for _, b in doc.family.offset_paths]}
    if doc.notes:
        out["notes"] = doc.notes
    return out


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def emit(doc: Document) -> str:
    """Canonical text: fixed key order, every rational as "p/q"."""
    return dumps(to_json(doc))


def delzant_to_json(data: DelzantData, checks: Sequence[VertexCheck] = ()) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "field": field_to_json(data.field),
        "d": data.d,
        "lambda": matrix_to_json(data.lam),
        "offsets": [element_to_json(L) for L in data.offsets],
        "kernel_basis": [[element_to_json(a) for a in v] for v in data.kernel_basis],
        "quadrics": [{"coeffs": [element_to_json(a) for a in q.coeffs], "rhs": element_to_json(q.rhs)}
                     for q in data.quadrics],
        "vertices": [{"point": [element_to_json(a) for a in point], "active_set": [i + 1 for i in active]}
                     for point, active in data.vertices],
    }
    if checks:
        out["vertex_lattices"] = [{"vertex": check.face.name, "passed": check.passed} for check in checks]
    return out
