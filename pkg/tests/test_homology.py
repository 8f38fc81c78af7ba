import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surfbundle import (
    CurveClass,
    DomainError,
    IntMatrix,
    MappingClass,
    Surface,
    TwistLetter,
    betti_one,
    compose,
    determinant,
    from_twist_word,
    integral_h1,
)

from helpers import random_mapping_class

M = IntMatrix.from_rows
TORUS = Surface(1)


@pytest.mark.parametrize("g", range(1, 5))
def test_identity(g):
    f = MappingClass.identity(Surface(g))
    assert betti_one(f) == 2 * g + 1
    h = integral_h1(f)
    assert h.betti_one == h.free_rank == 2 * g + 1
    assert h.torsion == ()


def test_torus_anosov():
    f = MappingClass(TORUS, M([[2, 1], [1, 1]]))
    assert betti_one(f) == 1
    assert integral_h1(f).to_json() == {"betti_one": 1, "torsion": []}


def test_torus_minus_identity():
    h = integral_h1(MappingClass(TORUS, -IntMatrix.identity(2)))
    assert h.free_rank == 1
    assert h.torsion == (2, 2)
    assert str(h) == "Z + Z/2 + Z/2"


def test_torus_twist():
    # I - T_a^n = [[0, n], [0, 0]]: H1 = Z^2 + Z/n
    for n in (1, 2, 5):
        h = integral_h1(from_twist_word(TORUS, [TwistLetter(TORUS.a(1), n)]))
        assert h.betti_one == 2
        assert h.torsion == ((n,) if n > 1 else ())


def test_torsion_order_is_abs_det():
    f = MappingClass(TORUS, M([[5, 3], [3, 2]]))
    h = integral_h1(f)
    order = 1
    for d in h.torsion:
        order *= d
    assert order == abs(determinant(IntMatrix.identity(2) - f.matrix))


def test_non_symplectic_rejected():
    bad = MappingClass(TORUS, M([[1, 1], [0, 2]]))
    with pytest.raises(DomainError):
        betti_one(bad)
    with pytest.raises(DomainError):
        integral_h1(bad)


@settings(max_examples=60)
@given(st.integers(1, 3), st.integers(0, 2**32))
def test_betti_matches_free_rank(g, seed):
    f = random_mapping_class(random.Random(seed), Surface(g))
    h = integral_h1(f)
    assert betti_one(f) == h.free_rank >= 1
    assert all(h.torsion[i + 1] % h.torsion[i] == 0 for i in range(len(h.torsion) - 1))
    assert (betti_one(f) == 2 * g + 1) == (f.matrix == IntMatrix.identity(2 * g))


@settings(max_examples=60)
@given(st.integers(1, 3), st.integers(0, 2**32))
def test_nondegenerate_means_betti_one(g, seed):
    f = random_mapping_class(random.Random(seed), Surface(g))
    if determinant(IntMatrix.identity(2 * g) - f.matrix) != 0:
        assert betti_one(f) == 1


@settings(max_examples=60)
@given(st.integers(1, 3), st.integers(0, 2**32))
def test_conjugacy_invariance(g, seed):
    rng = random.Random(seed)
    s = Surface(g)
    f = random_mapping_class(rng, s)
    c = random_mapping_class(rng, s)
    conj = compose(compose(c, f), c.inverse())
    assert betti_one(conj) == betti_one(f)
    assert integral_h1(conj) == integral_h1(f)


@settings(max_examples=30)
@given(st.integers(2, 3), st.integers(0, 2**32), st.integers(-5, 5).filter(bool))
def test_separating_twists_do_not_change_h1(g, seed, power):
    s = Surface(g)
    f = random_mapping_class(random.Random(seed), s)
    gamma = from_twist_word(s, [TwistLetter(CurveClass.separating_curve(s, "gamma"), power)])
    assert integral_h1(compose(gamma, f)) == integral_h1(f)
