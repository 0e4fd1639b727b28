from fractions import Fraction
import random

import pytest

from stacky.decorated.decorated_polytope import DecoratedPolytope
from stacky.error.value_error.too_many_facets_error import TooManyFacetsError
from stacky.isomorphism.iso_witness import IsoWitness
from stacky.isomorphism.search import IsomorphismSearch, are_isomorphic, transport
from stacky.polytope.face import Face
from stacky.quasilattice.quasilattice import Quasilattice
from stacky.scalar.matrix import FieldMatrix

from oracles import small_isomorphism_exists


def random_unimodular(rng: random.Random, steps: int = 4):
    M = [[1, 0], [0, 1]]
    for _ in range(steps):
        op = rng.choice(["add", "swap", "negate"])
        i = rng.randrange(2)
        if op == "add":
            k = rng.choice([-2, -1, 1, 2])
            M[i] = [a + k * b for a, b in zip(M[i], M[1 - i])]
        elif op == "swap":
            M = [M[1], M[0]]
        else:
            M[i] = [-a for a in M[i]]
    return M


def rational_data(D):
    normals = [tuple(a.as_rational() for a in v) for v in D.normals]
    return normals, [L.as_rational() for L in D.offsets]


@pytest.mark.parametrize("seed", range(20))
def test_transported_triangle_is_isomorphic(triangle, qq, seed):
    rng = random.Random(seed)
    T = FieldMatrix.from_rows(qq, random_unimodular(rng))
    c = (Fraction(rng.randint(-5, 5), rng.randint(1, 3)), Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
    copy = transport(triangle, T, c)
    assert copy.validate().valid
    witness = are_isomorphic(triangle, copy)
    assert witness is not None
    assert witness.verify(triangle, copy)
    assert witness.T == T
    assert witness.c == c
    assert witness.inverse().verify(copy, triangle)

@pytest.mark.parametrize("seed", range(8))
def test_matched_faces_have_the_same_isotropy(weighted_triangle, irrational_triangle, seed):
    rng = random.Random(50 + seed)
    D = irrational_triangle if seed % 2 else weighted_triangle
    T = FieldMatrix.from_rows(D.field, random_unimodular(rng))
    copy = transport(D, T, (rng.randint(-3, 3), rng.randint(-3, 3)))
    witness = are_isomorphic(D, copy)
    assert witness is not None
    for face in D.polytope.face_lattice():
        image = Face.of([witness.sigma[i] for i in face.active_set], D.n)
        assert D.face_isotropy(face) == copy.face_isotropy(image)

def test_triangle_and_weighted_triangle_are_not_isomorphic(triangle, weighted_triangle):
    assert are_isomorphic(triangle, weighted_triangle) is None
    assert not small_isomorphism_exists(*rational_data(triangle), *rational_data(weighted_triangle))

def test_search_agrees_with_exhaustive_search(triangle, qq):
    rng = random.Random(99)
    for _ in range(5):
        T = FieldMatrix.from_rows(qq, random_unimodular(rng, steps=2))
        copy = transport(triangle, T, (1, -1))
        found = are_isomorphic(triangle, copy) is not None
        assert found == small_isomorphism_exists(*rational_data(triangle), *rational_data(copy), bound=5)

def test_different_fields_are_not_isomorphic(triangle, irrational_triangle):
    assert are_isomorphic(triangle, irrational_triangle) is None

def test_different_facet_counts(triangle, square):
    assert are_isomorphic(triangle, square) is None

def test_square_symmetry_permutes_facets(square, qq):
    swap = FieldMatrix.from_rows(qq, [[0, 1], [1, 0]])
    copy = transport(square, swap, (0, 0))
    witness = IsomorphismSearch().find(square, copy)
    assert witness is not None
    assert witness.verify(square, copy)
    # the lexicographically first bijection is the identity, forced by the base vertex
    assert witness.sigma == (0, 1, 2, 3)

def test_quasifold_is_isomorphic_to_its_transport(irrational_triangle, sqrt2_field):
    T = FieldMatrix.from_rows(sqrt2_field, [[1, 1], [0, 1]])
    copy = transport(irrational_triangle, T, (0, 0))
    witness = are_isomorphic(irrational_triangle, copy)
    assert witness is not None
    assert witness.verify(irrational_triangle, copy)

def test_composition_and_inverse(triangle, qq):
    T1 = FieldMatrix.from_rows(qq, [[1, 1], [0, 1]])
    T2 = FieldMatrix.from_rows(qq, [[0, 1], [-1, 0]])
    D1 = transport(triangle, T1, (1, 0))
    D2 = transport(D1, T2, (0, 2))
    w1, w2 = are_isomorphic(triangle, D1), are_isomorphic(D1, D2)
    composed = w1.compose(w2)
    assert composed.verify(triangle, D2)
    assert composed.inverse().verify(D2, triangle)

def test_tampered_witness_fails(triangle, qq):
    copy = transport(triangle, FieldMatrix.identity(qq, 2), (1, 1))
    witness = are_isomorphic(triangle, copy)
    tampered = IsoWitness(witness.T, (qq.zero(), qq.zero()), witness.sigma, witness.kernel_iso_note)
    assert not tampered.verify(triangle, copy)

def test_finer_lattice_is_rejected(triangle, qq):
    # same polytope and normals, but the image lattice also contains (1/2, 1/2)
    finer = Quasilattice.from_columns(qq, [[1, 0], [Fraction(1, 2), Fraction(1, 2)]])
    D = DecoratedPolytope(finer, ((-1, 0), (1, -2), (0, 2)), (0, 0, 1))
    assert D.normals == triangle.normals
    assert D.quasilattice.kernel() == triangle.quasilattice.kernel()
    assert are_isomorphic(triangle, D) is None

def test_facet_limit(square):
    with pytest.raises(TooManyFacetsError):
        IsomorphismSearch(max_facets=3).find(square, square)

def test_witness_text(triangle):
    witness = are_isomorphic(triangle, triangle)
    assert "f1->f1" in str(witness)
    assert "trivial" in witness.kernel_iso_note
