from __future__ import annotations
from dataclasses import dataclass
from typing import List, Sequence

from .delzant_data import DelzantData
from ..decorated.decorated_polytope import DecoratedPolytope
from ..polytope.face import Face
from ..scalar.field import RealAlgebraicField
from ..scalar.matrix import FieldMatrix, Vector


@dataclass(frozen=True)
class VertexCheck:
    face: Face
    passed: bool
    message: str = ""

    def __str__(self) -> str:
        return f"[{'ok' if self.passed else 'FAIL'}] {self.face}" + (f": {self.message}" if self.message else "")


def _spans_integrally(field: RealAlgebraicField, basis: Sequence[Vector], vectors: Sequence[Vector], n: int) -> bool:
    """Whether every vector is an integer combination of the (independent) basis vectors."""
    matrix = FieldMatrix.from_columns(field, list(basis), n)
    for v in vectors:
        x = matrix.solve(v)
        if x is None or not all(a.is_rational() and a.as_rational().denominator == 1 for a in x):
            return False
    return True


def verify_vertex_lattices(D: DecoratedPolytope, data: DelzantData) -> List[VertexCheck]:
    """
    Compares, at every vertex, the lattice spanned by the columns of λ at the active
        facets with the image under ∂ of the decorated face label.
    Both routes describe the same subgroup, so a failure points at a bug.
    """
    checks = []
    columns = data.lam.columns()
    for _, active in data.vertices:
        face = Face.of(active, data.n)
        delzant_route = [columns[i] for i in active]
        decorated_route = [D.quasilattice.apply(q) for q in D.face_label(face).columns()]
        same = (_spans_integrally(data.field, decorated_route, delzant_route, data.n)
                and _spans_integrally(data.field, delzant_route, decorated_route, data.n))
        checks.append(VertexCheck(face, same, "" if same else "vertex lattices differ"))
    return checks
