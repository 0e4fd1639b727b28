from fractions import Fraction

import pytest

from stacky.delzant.delzant_data import compile as compile_delzant
from stacky.delzant.sampler import LevelSetSampler, sample_level_set, samples_frame
from stacky.delzant.vertex_check import verify_vertex_lattices
from stacky.error.value_error.empty_interior_error import EmptyInteriorError
from stacky.error.value_error.invalid_decorated_polytope_error import InvalidDecoratedPolytopeError


@pytest.fixture
def triangle_data(triangle):
    return compile_delzant(triangle)


def test_triangle_kernel(triangle_data):
    assert triangle_data.n == 2 and triangle_data.d == 3
    assert triangle_data.kernel_basis == ((1, 1, 1),)
    (quadric,) = triangle_data.quadrics
    assert quadric.rhs == 1
    assert str(quadric) == "(1)*t1 + (1)*t2 + (1)*t3 = 1"

def test_quasifold_kernel(irrational_triangle, sqrt2_field):
    a = sqrt2_field.generator()
    data = compile_delzant(irrational_triangle)
    assert data.kernel_basis == ((1, a, 1),)
    assert data.quadrics[0].rhs == 1

def test_square_has_two_quadrics(square):
    data = compile_delzant(square)
    assert len(data.quadrics) == 2
    assert [q.rhs for q in data.quadrics] == [1, 1]

def test_invalid_datum_does_not_compile(slab):
    with pytest.raises(InvalidDecoratedPolytopeError):
        compile_delzant(slab)

def test_t_of_vertices(triangle_data, qq):
    zero, one = qq.zero(), qq.one()
    assert triangle_data.t_of((zero, zero)) == (0, 0, 1)
    assert triangle_data.t_of((one, zero)) == (1, 0, 0)
    assert triangle_data.in_level_set(triangle_data.t_of((zero, one)))
    assert not triangle_data.in_level_set((one, one, one))

def test_moment_point_inverts_t_of(triangle_data, qq):
    xi = (qq.from_rational(Fraction(1, 5)), qq.from_rational(Fraction(2, 7)))
    assert triangle_data.moment_point(triangle_data.t_of(xi)) == xi
    assert triangle_data.moment_point((qq.one(), qq.one(), qq.one())) is None


def test_thousand_exact_samples(triangle_data):
    samples = LevelSetSampler(triangle_data, seed=7).sample(1000)
    assert len(samples) == 1000
    assert [s.index for s in samples] == list(range(1000))
    for s in samples:
        assert s.exact
        assert all(x.sign() >= 0 for x in s.t)
        assert triangle_data.moment_point(s.t) == s.xi

def test_quasifold_samples_are_exact(irrational_triangle):
    data = compile_delzant(irrational_triangle)
    assert all(s.exact for s in sample_level_set(data, 50, seed=3))

def test_sampling_is_reproducible(triangle_data):
    first = LevelSetSampler(triangle_data, seed=11).sample(20)
    again = LevelSetSampler(triangle_data, seed=11).sample(20)
    other = LevelSetSampler(triangle_data, seed=12).sample(20)
    assert first == again
    assert first != other

def test_indices_are_drawn_independently(triangle_data):
    sampler = LevelSetSampler(triangle_data, seed=5)
    assert sampler.draw(9) == sampler.sample(10)[9]

def test_sampler_gives_up(triangle_data):
    with pytest.raises(EmptyInteriorError):
        LevelSetSampler(triangle_data, seed=0, max_rejections=0).sample(1)


def test_samples_frame(triangle_data):
    samples = sample_level_set(triangle_data, 5, seed=1)
    frame = samples_frame(samples, 1)
    assert list(frame.columns) == ["seed", "index", "t1", "t2", "t3", "xi1", "xi2", "exact"]
    assert len(frame) == 5
    assert frame["exact"].all()
    with_moduli = samples_frame(samples, 1, moduli=True)
    assert ["z1_sq", "z2_sq", "z3_sq"] == [c for c in with_moduli.columns if c.startswith("z")]


def test_vertex_lattices_agree(triangle, weighted_triangle, irrational_triangle, square):
    for D in (triangle, weighted_triangle, irrational_triangle, square):
        checks = verify_vertex_lattices(D, compile_delzant(D))
        assert len(checks) == len(D.polytope.vertices())
        assert all(check.passed for check in checks)
        assert str(checks[0]).startswith("[ok] ")
