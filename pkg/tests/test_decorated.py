import pytest

from stacky.abelian.group import FgAbelianGroup
from stacky.decorated.classification import Classification
from stacky.decorated.decorated_polytope import DecoratedPolytope
from stacky.error.value_error.invalid_decorated_polytope_error import InvalidDecoratedPolytopeError
from stacky.error.value_error.not_a_lattice_error import NotALatticeError
from stacky.polytope.face import Face
from stacky.quasilattice.quasilattice import Quasilattice
from stacky.scalar.matrix import FieldMatrix

from oracles import coset_count


def test_triangle_is_valid(triangle):
    report = triangle.validate()
    assert report.valid
    assert report.first_failure is None
    assert {c.name for c in report.checks} == {"quasirational", "markers", "polytope", "independence", "vertex_rank"}

def test_slab_is_invalid(slab):
    report = slab.validate()
    assert not report.valid
    failure = report.first_failure
    assert failure.name == "polytope"
    assert failure.message.startswith("Unbounded")
    with pytest.raises(InvalidDecoratedPolytopeError):
        report.raise_if_invalid()

def test_irrational_triangle_is_valid(irrational_triangle):
    assert irrational_triangle.validate().valid

def test_zero_marker_image_is_not_quasirational(qq):
    q = Quasilattice.from_columns(qq, [[1, 0], [0, 1], [1, 1]])
    D = DecoratedPolytope(q, ((-1, 0, 0), (0, -1, 0), (0, 0, 1), (1, 1, -1)), (0, 0, 1, 0))
    report = D.validate()
    assert not report.valid
    assert report.first_failure.name == "quasirational"
    assert report.first_failure.face == "f4"

def test_too_many_facets_is_reported(qq):
    directions = [(1, 0), (2, 1), (1, 1), (1, 2), (0, 1), (-1, 2), (-1, 1), (-2, 1),
                  (-1, 0), (-2, -1), (-1, -1), (-1, -2), (0, -1), (1, -2), (1, -1), (2, -1)]
    D = DecoratedPolytope(Quasilattice.standard(qq, 2), tuple(directions), (1,) * len(directions))
    report = D.validate()
    assert not report.valid
    assert report.first_failure.name == "polytope"
    assert report.first_failure.message == "TooManyFacets: vertex enumeration is limited to 12 facets, got 16"

def test_face_labels(triangle, irrational_triangle):
    assert triangle.face_label(Face.of((0, 1), 2)).columns() == [(-1, 0), (0, -1)]
    assert triangle.face_label(Face.of((2,), 2)).cols == 1
    assert triangle.face_label(Face.of((), 2)).cols == 0
    assert irrational_triangle.face_label(Face.of((0, 2), 2)).columns() == [(1, 0, 0), (0, 0, 1)]

def test_face_label_images(irrational_triangle, sqrt2_field):
    a = sqrt2_field.generator()
    assert irrational_triangle.face_label_image(Face.of((0, 2), 2)) == [(-1, 0), (1, a)]

def test_face_labels_have_full_rank(irrational_triangle, weighted_triangle, square):
    for D in (irrational_triangle, weighted_triangle, square):
        for face in D.polytope.face_lattice():
            image = FieldMatrix.from_rows(D.field, D.face_label_image(face), D.n)
            assert image.rank() == face.codim == D.face_label(face).cols

def test_face_labels_agree_with_vertex_route(square, weighted_triangle):
    # reading the markers off any vertex in the closure of a face gives the same label
    for D in (square, weighted_triangle):
        for face in D.polytope.face_lattice():
            for _, active in D.polytope.vertices():
                if set(face.active_set) <= set(active):
                    from_vertex = [D.markers[i] for i in active if i in face.active_set]
                    assert D.face_label(face).columns() == from_vertex

def test_triangle_isotropy_is_trivial(triangle):
    assert all(group.is_trivial() for _, group in triangle.isotropy_table())

def test_weighted_triangle_isotropy(weighted_triangle):
    table = {face.name: group for face, group in weighted_triangle.isotropy_table()}
    assert table["f3"] == FgAbelianGroup(0, (2,))
    assert table["f1∩f3"] == FgAbelianGroup(0, (2,))
    assert table["f2∩f3"] == FgAbelianGroup(0, (2,))
    assert table["f1∩f2"].is_trivial()
    assert table["f1"].is_trivial()
    assert table["interior"].is_trivial()

def test_weighted_triangle_isotropy_matches_coset_enumeration(weighted_triangle):
    edge = weighted_triangle.face_isotropy(Face.of((2,), 2))
    assert edge.order == coset_count([(1, 1)], [(2, 2)], box=4)
    vertex = weighted_triangle.face_isotropy(Face.of((1, 2), 2))
    assert vertex.order == coset_count([(1, 0), (0, 1)], [(0, -1), (2, 2)], box=3)

def test_quasifold_isotropy(irrational_triangle):
    table = {face.name: group for face, group in irrational_triangle.isotropy_table()}
    assert table["f1∩f3"] == FgAbelianGroup(1)
    assert table["f1"].is_trivial()
    assert table["f3"].is_trivial()
    # (0, 1) and (0, √2) both lie in ∂(Q), and only the first is in the label of f2
    assert table["f2"] == FgAbelianGroup(1)
    assert table["interior"].is_trivial()

def test_isotropy_table_order(square):
    dims = [face.dim for face, _ in square.isotropy_table()]
    assert dims == sorted(dims)

def test_interior_isotropy_is_the_kernel(qq):
    q = Quasilattice.from_columns(qq, [[1, 0], [0, 1], [1, 1]], torsion=[3])
    D = DecoratedPolytope(q, ((-1, 0, 0), (0, -1, 0), (1, 1, 0)), (0, 0, 1))
    assert D.face_isotropy(Face.of((), 2)) == q.kernel()
    assert str(q.kernel()) == "Z x Z/3"

def test_lt_labels(triangle, weighted_triangle, irrational_triangle):
    assert triangle.lt_labels() == (1, 1, 1)
    assert weighted_triangle.lt_labels() == (1, 1, 2)
    with pytest.raises(NotALatticeError):
        irrational_triangle.lt_labels()

def test_classify(triangle, weighted_triangle, irrational_triangle):
    assert triangle.classify().kind == Classification.SMOOTH
    assert weighted_triangle.classify().kind == Classification.EFFECTIVE
    assert irrational_triangle.classify().kind == Classification.QUASIFOLD
    assert not irrational_triangle.classify().is_orbifold_type()

def test_smooth_implies_unit_labels(triangle, square):
    for D in (triangle, square):
        assert D.classify().kind == Classification.SMOOTH
        assert set(D.lt_labels()) == {1}

def test_ineffective_orbifold(irrational_doc):
    endpoint = irrational_doc.family.evaluate(1)
    classification = endpoint.classify()
    assert classification.kind == Classification.INEFFECTIVE
    assert classification.global_isotropy == FgAbelianGroup(1)
    assert str(classification) == "IneffectiveOrbifold(Z)"
    with pytest.raises(NotALatticeError):
        endpoint.lt_labels()
    assert endpoint.effective_part().lt_labels() == (1, 1, 1)

def test_torsion_makes_an_ineffective_orbifold(triangle):
    q = Quasilattice(torsion=(2,), gen_matrix=triangle.quasilattice.gen_matrix)
    D = DecoratedPolytope(q, triangle.markers, triangle.offsets)
    assert str(D.classify()) == "IneffectiveOrbifold(Z/2)"
    assert D.effective_part().classify().kind == Classification.SMOOTH

def test_effective_part_in_a_coarser_lattice(qq):
    q = Quasilattice.from_columns(qq, [[2, 0], [0, 1]])
    D = DecoratedPolytope(q, ((-1, 0), (0, -1), (1, 1)), (0, 0, 2))
    assert D.validate().valid
    with pytest.raises(NotALatticeError):
        D.lt_labels()
    effective = D.effective_part()
    assert effective.markers == D.markers
    assert effective.normals == D.normals
    assert effective.classify().kind == Classification.SMOOTH

def test_markers_are_coerced(qq):
    D = DecoratedPolytope(Quasilattice.standard(qq, 2), ([-1, 0], [0, -1], [1, 1]), (0, 0, 1))
    assert D.markers == ((-1, 0), (0, -1), (1, 1))
    assert D.offsets[2] == 1
    with pytest.raises(ValueError):
        DecoratedPolytope(Quasilattice.standard(qq, 2), ((1, 0, 0),), (0,))
