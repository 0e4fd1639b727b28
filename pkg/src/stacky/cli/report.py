"""Human-readable renderings of results; tables go through pandas."""
from __future__ import annotations
from typing import List, Optional, Sequence

import pandas as pd

from ..decorated.classification import Classification
from ..decorated.decorated_polytope import DecoratedPolytope
from ..decorated.validation_report import ValidationReport
from ..delzant.delzant_data import DelzantData
from ..delzant.vertex_check import VertexCheck
from ..error.value_error.not_a_lattice_error import NotALatticeError
from ..isomorphism.iso_witness import IsoWitness


def table(rows: List[dict]) -> str:
    if not rows:
        return "(empty)"
    return pd.DataFrame(rows).to_string(index=False)


def validation_text(report: ValidationReport, classification: Optional[Classification]) -> str:
    if report.valid:
        return f"valid; classification: {classification}"
    lines = ["invalid"]
    lines.extend(str(check) for check in report.failures)
    return "\n".join(lines)


def _labels(D: DecoratedPolytope) -> Optional[str]:
    try:
        return ", ".join(str(k) for k in D.lt_labels())
    except NotALatticeError:
        return None


def info_text(D: DecoratedPolytope) -> str:
    classification = D.classify()
    q = D.quasilattice
    conditions = D.polytope.delzant_conditions()
    lines = [
        f"classification: {classification}",
        f"dimension: {D.n}, facets: {D.d}, vertices: {len(D.polytope.vertices())}",
        f"field: {D.field}",
        f"quasilattice: Q = Z^{q.m}" + "".join(f" x Z/{t}" for t in q.torsion)
        + f", image rank {q.image_rank()}, discrete: {'yes' if q.is_discrete() else 'no'}",
        f"global isotropy (ker ∂): {q.kernel()}",
        "Delzant conditions: " + ", ".join(f"{k} {'yes' if v else 'no'}" for k, v in conditions.items()),
        "",
        "isotropy:",
        table([{"face": face.name, "dim": face.dim, "isotropy": str(group)} for face, group in D.isotropy_table()]),
    ]
    labels = _labels(D)
    if labels is not None:
        lines.append(f"Lerman-Tolman labels: ({labels})")
    elif classification.is_orbifold_type():
        effective = _labels(D.effective_part())
        if effective is not None:
            lines.append(f"effective part labels: ({effective})")
    return "\n".join(lines)


def iso_text(witness: Optional[IsoWitness]) -> str:
    if witness is None:
        return "no"
    return f"yes\n{witness}"


def delzant_text(data: DelzantData, checks: Sequence[VertexCheck]) -> str:
    lines = [f"d = {data.d}, n = {data.n}, kernel rank {len(data.kernel_basis)}",
             "kernel basis:"]
    lines.extend("  (" + ", ".join(str(a) for a in v) + ")" for v in data.kernel_basis)
    lines.append("quadrics:")
    lines.extend(f"  {q}" for q in data.quadrics)
    lines.append("vertex lattices:")
    lines.append(table([{"vertex": c.face.name, "passed": c.passed} for c in checks]))
    return "\n".join(lines)
