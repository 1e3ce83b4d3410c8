import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strictspan import _backend
from strictspan.ball import Verdict
from strictspan.complex import Complex, boundary_complex
from strictspan.corpus import random_2ball, random_shellable_ball, trivial_instances
from strictspan.errors import BudgetExceeded, MalformedTree, NotAPermutation, Timeout
from strictspan.oracles import (
    BALL,
    LITERAL,
    Leaf,
    ShellingCertificate,
    Split,
    consistency_check,
    is_constructible,
    is_shellable,
    tree_from_dict,
    verify_construction,
    verify_shelling,
)

import reference

TET = Complex([(1, 2, 3, 4)])


def test_shellable_examples(ex32, backend):
    assert is_shellable(TET, backend=backend).order == ((1, 2, 3, 4),)
    cert = is_shellable(ex32, backend=backend)
    assert len(cert.order) == 36 and verify_shelling(ex32, cert)
    assert is_shellable(Complex([(1, 2, 3), (4, 5, 6)]), backend=backend) is None


def test_backends_agree_on_orders(ex32):
    if len(_backend.available_backends()) < 2:
        pytest.skip("compiled kernel not built")
    cases = [ex32] + [random_shellable_ball(s, 1 + s % 25) for s in range(60)]
    cases += [Complex(random_shellable_ball(s, 8).facets | {(20, 21, 22, 23)}) for s in range(10)]
    for c in cases:
        assert is_shellable(c, backend="cython") == is_shellable(c, backend="python")


def test_verify_shelling_examples():
    assert verify_shelling(TET, ShellingCertificate(((1, 2, 3, 4),)))
    strip = Complex([(1, 2, 3), (3, 4, 5)])
    assert not verify_shelling(strip, ShellingCertificate(((1, 2, 3), (3, 4, 5))))
    assert not verify_shelling(strip, ShellingCertificate(((3, 4, 5), (1, 2, 3))))
    with pytest.raises(NotAPermutation):
        verify_shelling(strip, ShellingCertificate(((1, 2, 3),)))
    with pytest.raises(NotAPermutation):
        verify_shelling(strip, ShellingCertificate(((1, 2, 3), (1, 2, 3), (3, 4, 5))))


def test_bad_order_of_shellable_ball_rejected():
    c = Complex([(1, 2, 3, 4), (2, 3, 4, 5), (3, 4, 5, 6)])
    assert verify_shelling(c, ShellingCertificate(((1, 2, 3, 4), (2, 3, 4, 5), (3, 4, 5, 6))))
    assert not verify_shelling(c, ShellingCertificate(((1, 2, 3, 4), (3, 4, 5, 6), (2, 3, 4, 5))))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 100_000), st.integers(1, 5))
def test_shellability_matches_permutation_search(seed, n):
    c = random_shellable_ball(seed, n)
    assert is_shellable(c) is not None
    assert reference.brute_shellable(c.facets)


small_pure2 = st.lists(st.frozensets(st.integers(1, 6), min_size=3, max_size=3), min_size=1, max_size=5, unique=True)


@settings(max_examples=150, deadline=None)
@given(small_pure2)
def test_shellability_and_literal_constructibility_match_brute_force(fs):
    c = Complex(fs)
    assert (is_shellable(c) is not None) == reference.brute_shellable(c.facets)
    tree = is_constructible(c, LITERAL, use_shelling=False)
    assert (tree is not None) == reference.brute_constructible(c.facets)
    if tree is not None:
        assert verify_construction(c, tree, LITERAL)


def test_constructible_examples(ex32):
    assert is_constructible(TET) == Leaf((1, 2, 3, 4))
    bip = Complex([(1, 2, 3, 4), (2, 3, 4, 5)])
    tree = is_constructible(bip, use_shelling=False)
    assert isinstance(tree, Split) and tree.divide == Complex([(2, 3, 4)])
    for mode in (BALL, LITERAL):
        t = is_constructible(ex32, mode)
        assert t is not None and verify_construction(ex32, t, mode)


def test_constructible_budget(ex32):
    with pytest.raises(BudgetExceeded):
        is_constructible(ex32, LITERAL, facet_cap=14, use_shelling=False)


def test_shelling_timeout():
    # a disconnected complex forces the search to exhaust every shellable subset of the ball
    big = Complex(random_shellable_ball(7, 40).facets | {(100, 101, 102, 103)})
    with pytest.raises(Timeout):
        is_shellable(big, budget_secs=0.05, backend="python")


def test_verify_construction_examples():
    assert verify_construction(TET, Leaf((1, 2, 3, 4)))
    two = Complex([(1, 2, 3, 4), (5, 6, 7, 8)])
    bad = Split(Leaf((1, 2, 3, 4)), Leaf((5, 6, 7, 8)), Complex())
    assert not verify_construction(two, bad, BALL)
    assert not verify_construction(two, bad, LITERAL)
    with pytest.raises(MalformedTree):
        verify_construction(two, Leaf((1, 2, 3, 4)))
    bip = Complex([(1, 2, 3, 4), (2, 3, 4, 5)])
    wrong_divide = Split(Leaf((1, 2, 3, 4)), Leaf((2, 3, 4, 5)), Complex([(2, 3)]))
    assert not verify_construction(bip, wrong_divide)


def test_literal_tree_needs_divide_certificate():
    bip = Complex([(1, 2, 3, 4), (2, 3, 4, 5)])
    bare = Split(Leaf((1, 2, 3, 4)), Leaf((2, 3, 4, 5)), Complex([(2, 3, 4)]))
    assert verify_construction(bip, bare, BALL)
    assert not verify_construction(bip, bare, LITERAL)
    full = Split(bare.left, bare.right, bare.divide, Leaf((2, 3, 4)))
    assert verify_construction(bip, full, LITERAL)


def test_zero_dimensional_convention():
    assert is_constructible(Complex([(1,), (2,)]), LITERAL, use_shelling=False) is not None
    assert is_constructible(Complex([(1,), (2,), (3,)]), LITERAL, use_shelling=False) is None
    cycle = Complex([(1, 2), (2, 3), (1, 3)])
    t = is_constructible(cycle, LITERAL, use_shelling=False)
    assert t is not None and verify_construction(cycle, t, LITERAL)
    assert is_constructible(Complex([(1, 2), (3, 4)]), LITERAL) is None


def test_tree_round_trip(ex32):
    t = is_constructible(ex32, LITERAL)
    assert tree_from_dict(t.to_dict()) == t


def test_hierarchy_and_soundness_on_corpus():
    for inst in trivial_instances():
        c = inst.complex
        if not c.is_pure or c.dimension != 3:
            continue
        shell = is_shellable(c)
        tree = is_constructible(c)
        assert (shell is not None) == inst.expected["shellable"]
        assert (tree is not None) == inst.expected["constructible"]
        if shell is not None:
            assert verify_shelling(c, shell) and tree is not None
        if tree is not None:
            assert verify_construction(c, tree)


def test_consistency_check(ex32):
    res = consistency_check(ex32)
    assert res.consistent and res.constructible and res.verdict == Verdict.UNKNOWN.value


def test_two_balls_constructible_both_modes():
    for s in range(40):
        d = random_2ball(s, 1 + s % 8)
        for mode in (BALL, LITERAL):
            t = is_constructible(d, mode, use_shelling=False)
            assert t is not None and verify_construction(d, t, mode)


def test_sphere_boundary_not_ball_constructible():
    sphere = boundary_complex(Complex([(1, 2, 3, 4, 5)]))
    assert is_constructible(sphere, LITERAL) is not None
    assert is_constructible(sphere, BALL, use_shelling=False) is None


def test_pure_python_can_be_forced():
    import os
    import subprocess
    import sys
    env = {**os.environ, "STRICTSPAN_PURE_PYTHON": "1"}
    proc = subprocess.run([sys.executable, "-c", "from strictspan import _backend; print(_backend.available_backends())"],
                          capture_output=True, text=True, env=env)
    assert proc.stdout.strip() == "['python']"
