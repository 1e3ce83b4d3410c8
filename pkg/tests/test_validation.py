import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strictspan.complex import Complex, boundary_complex, vertex_link
from strictspan.corpus import random_2ball, random_shellable_ball
from strictspan.validation import graph_shape, is_1ball, is_2ball, is_2sphere, validate, validate_3ball

TET = Complex([(1, 2, 3, 4)])
TET_BD = boundary_complex(TET)


def test_2ball_examples():
    assert is_2ball(Complex([(1, 2, 3)])).passed
    rep = is_2ball(TET_BD)
    assert not rep.passed
    assert any(f.startswith("euler") for f in rep.failures)
    assert any(f.startswith("boundary-cycle") for f in rep.failures)
    pinch = is_2ball(Complex([(1, 2, 3), (3, 4, 5)]))
    assert not pinch.passed
    assert any("vertex-links" in f and "[3]" in f for f in pinch.failures)


def test_2sphere_examples(ex32):
    assert is_2sphere(TET_BD).passed
    assert not is_2sphere(Complex([(1, 2, 3)])).passed
    assert is_2sphere(boundary_complex(ex32)).passed


def test_3ball_examples(ex32):
    assert validate_3ball(TET).passed
    rep = validate_3ball(Complex([(1, 2, 3, 4), (5, 6, 7, 8)]))
    assert not rep.passed
    assert any(f.startswith("strongly-connected") for f in rep.failures)
    assert any(f.startswith("euler: chi=2") for f in rep.failures)
    assert validate_3ball(ex32).passed
    assert validate_3ball(ex32).summary == "consistent with a 3-ball"
    assert not validate_3ball(TET_BD).passed


def test_pinched_balls_fail():
    assert not validate_3ball(Complex([(1, 2, 3, 4), (4, 5, 6, 7)])).passed
    assert not validate_3ball(Complex([(1, 2, 3, 4), (3, 4, 5, 6)])).passed
    assert not validate_3ball(Complex([(1, 2, 3, 4), (1, 2, 3, 5), (1, 2, 3, 6)])).passed


def test_graph_shapes():
    assert graph_shape(Complex([(1,)])) == "path"
    assert graph_shape(Complex([(1, 2), (2, 3)])) == "path"
    assert graph_shape(Complex([(1, 2), (2, 3), (1, 3)])) == "cycle"
    assert graph_shape(Complex([(1, 2), (3, 4)])) is None
    assert graph_shape(Complex([(1, 2), (1, 3), (1, 4)])) is None
    assert is_1ball(Complex([(1, 2)]))
    assert not is_1ball(Complex([(1,)]))


def test_validate_dispatch():
    assert validate(TET_BD, "sphere2").passed
    with pytest.raises(ValueError):
        validate(TET, "torus")


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 14))
def test_sphere_and_ball_exclusive(seed, n):
    b = random_shellable_ball(seed, n)
    bd = boundary_complex(b)
    d = random_2ball(seed, n)
    for c in (bd, d):
        assert not (is_2ball(c).passed and is_2sphere(c).passed)
    assert is_2sphere(bd).passed and is_2ball(d).passed


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 14))
def test_links_split_boundary_and_interior(seed, n):
    b = random_shellable_ball(seed, n)
    assert validate_3ball(b).passed
    bd_verts = boundary_complex(b).vertices
    for v in b.vertices:
        lk = vertex_link(b, v)
        if v in bd_verts:
            assert is_2ball(lk).passed
        else:
            assert is_2sphere(lk).passed


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 14))
def test_cone_over_sphere_is_ball(seed, n):
    sphere = boundary_complex(random_shellable_ball(seed, n))
    apex = max(sphere.vertices) + 1
    cone = Complex(t + (apex,) for t in sphere.facets)
    assert validate_3ball(cone).passed
