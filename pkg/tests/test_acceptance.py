"""Exit criteria for the package. Each test is one criterion; a PASS/FAIL
line per criterion is printed in the terminal summary.

Run alone with ``pytest tests/test_acceptance.py``.
"""
import itertools
import random
import time

import pytest

from surfbundle import (
    CurveClass,
    IntMatrix,
    MappingClass,
    Surface,
    Verdict,
    betti_one,
    build_extension,
    certify_pseudo_anosov,
    delta_general_block,
    delta_one_block,
    determinant,
    integral_h1,
    smith_normal_form,
    standard_symplectic_form,
    transvection_matrix,
)
from surfbundle.surface import pairing

from helpers import minors_gcd, random_mapping_class, random_matrix, random_primitive_vector

M = IntMatrix.from_rows
ANOSOV = M([[2, 1], [1, 1]])


def test_criterion_1_delta_one_family(record_criterion):
    record_criterion(1, "delta=1 block [[2+k,1+k],[1,1]]: det 1, det(I-A) = -(1+k) for k in 0..50, < 1 s")
    start = time.perf_counter()
    for k in range(51):
        a = delta_one_block(k)
        assert a == M([[2 + k, 1 + k], [1, 1]])
        assert determinant(a) == 1
        assert determinant(IntMatrix.identity(2) - a) == -(1 + k) != 0
    assert time.perf_counter() - start < 1.0


def test_criterion_2_general_block(record_criterion):
    record_criterion(2, "delta in {2,3,4}, 100 random multiplicity vectors each: A symplectic, "
                        "det(I-A) = 2^(2 delta), < 5 s")
    rng = random.Random(20)
    start = time.perf_counter()
    for delta in (2, 3, 4):
        j = standard_symplectic_form(delta)
        ident = IntMatrix.identity(2 * delta)
        for _ in range(100):
            mults = [rng.choice([-1, 1]) * rng.randint(1, 12) for _ in range(delta)]
            a = delta_general_block(delta, mults)
            assert a.T @ j @ a == j
            assert determinant(ident - a) == 2 ** (2 * delta)
    assert time.perf_counter() - start < 5.0


def _target_corpus(n: int = 200, seed: int = 30) -> list[MappingClass]:
    """Twist-word monodromies on genus 1..3: torus ones certified Anosov,
    higher genus ones with I - f_# nondegenerate."""
    rng = random.Random(seed)
    corpus = []
    while len(corpus) < n:
        g = 1 + len(corpus) % 3
        s = Surface(g)
        f = random_mapping_class(rng, s)
        if g == 1:
            if certify_pseudo_anosov(f).verdict != Verdict.CERTIFIED_PA:
                continue
        elif determinant(IntMatrix.identity(2 * g) - f.matrix) == 0:
            continue
        corpus.append(f)
    return corpus


@pytest.fixture(scope="module")
def extension_corpus():
    """Criterion 3's corpus: for each target an equal-betti and a naive extension."""
    rng = random.Random(31)
    start = time.perf_counter()
    builds = []
    for f_t in _target_corpus():
        delta = rng.randint(1, 3)
        g_s = f_t.genus + delta
        if delta == 1:
            eq = build_extension(f_t, g_s, "equal-betti", k=rng.randint(0, 20))
        else:
            mults = [rng.choice([-1, 1]) * rng.randint(1, 5) for _ in range(delta)]
            eq = build_extension(f_t, g_s, "equal-betti", multiplicities=mults)
        naive = build_extension(f_t, g_s, "naive")
        builds.append((f_t, delta, eq, naive))
    return builds, time.perf_counter() - start


def test_criterion_3_betti_equality(record_criterion, extension_corpus):
    record_criterion(3, "200 random genus 1..3 targets: equal-betti keeps b1, naive adds 2 delta, < 10 s")
    builds, build_time = extension_corpus
    assert len(builds) == 200
    assert {f_t.genus for f_t, *_ in builds} == {1, 2, 3}
    start = time.perf_counter()
    for f_t, delta, eq, naive in builds:
        b_t = betti_one(f_t)
        assert betti_one(eq.f_s) == b_t
        assert betti_one(naive.f_s) == b_t + 2 * delta
    assert build_time + time.perf_counter() - start < 10.0


def test_criterion_4_commuting_square(record_criterion, extension_corpus):
    record_criterion(4, "P F_s = F_t P for every extension in criterion 3's corpus")
    builds, _ = extension_corpus
    for f_t, _, eq, naive in builds:
        for r in (eq, naive):
            p = r.pinch.matrix
            assert p @ r.f_s.matrix == f_t.matrix @ p


def test_criterion_5_snf_minor_oracle(record_criterion):
    record_criterion(5, "500 random matrices up to 5x5, entries in [-9,9]: d1...dk = gcd of k x k minors, < 30 s")
    rng = random.Random(50)
    start = time.perf_counter()
    for _ in range(500):
        m = random_matrix(rng, max_dim=5, lo=-9, hi=9)
        d = smith_normal_form(m).diagonal
        rows = m.tolist()
        prod = 1
        for k in range(1, min(m.shape) + 1):
            prod = prod * d[k - 1] if k <= len(d) else 0
            assert prod == minors_gcd(rows, k)
    assert time.perf_counter() - start < 30.0


def _check_pair(x: CurveClass, y: CurveClass) -> None:
    tx, ty = transvection_matrix(x), transvection_matrix(y)
    p = pairing(x.homology, y.homology)
    if abs(p) == 1:
        assert tx @ ty @ tx == ty @ tx @ ty
    elif p == 0:
        assert tx @ ty == ty @ tx


def test_criterion_6_symplectic_laws(record_criterion):
    record_criterion(6, "transvections preserve J; braid relation when <a,b> = +-1; commutation when "
                        "<a,b> = 0; all basis pairs for g <= 4 plus 1000 random probes")
    for g in range(1, 5):
        s = Surface(g)
        j = standard_symplectic_form(g)
        curves = s.basis_curves()
        for c in curves:
            for k in (-3, -1, 1, 2):
                t = transvection_matrix(c, k)
                assert t.T @ j @ t == j
        for x, y in itertools.product(curves, repeat=2):
            if x != y:
                _check_pair(x, y)

    rng = random.Random(60)
    braid = commute = 0
    for i in range(1000):
        g = rng.randint(1, 4)
        s = Surface(g)
        j = standard_symplectic_form(g)
        c = CurveClass(s, random_primitive_vector(rng, 2 * g))
        t = transvection_matrix(c, rng.choice([-4, -2, -1, 1, 3, 5]))
        assert t.T @ j @ t == j
        # carry a standard pair with known pairing through a random symplectic map
        h = random_mapping_class(rng, s, min_len=2, max_len=6).matrix
        if i % 2 == 0:
            x, y = s.a(1), s.b(1)
            braid += 1
        else:
            x, y = (s.a(1), s.a(2)) if g > 1 else (s.a(1), s.a(1))
            commute += 1
        hx = CurveClass(s, h.apply(x.homology))
        hy = CurveClass(s, h.apply(y.homology))
        assert abs(pairing(hx.homology, hy.homology)) == abs(pairing(x.homology, y.homology))
        _check_pair(hx, hy)
    assert braid == commute == 500


def test_criterion_7_mapping_torus_spot_values(record_criterion):
    record_criterion(7, "identity -> b1 = 2g+1; torus [[2,1],[1,1]] -> Z; torus -I -> Z + (Z/2)^2")
    for g in range(1, 6):
        f = MappingClass.identity(Surface(g))
        assert betti_one(f) == 2 * g + 1
        assert integral_h1(f).torsion == ()
    h = integral_h1(MappingClass(Surface(1), ANOSOV))
    assert (h.free_rank, h.torsion) == (1, ())
    h = integral_h1(MappingClass(Surface(1), -IntMatrix.identity(2)))
    assert (h.free_rank, h.torsion) == (1, (2, 2))


def test_criterion_8_certificate_negative_controls(record_criterion):
    record_criterion(8, "torus trace-2 twist -> certified-not-pA; genus-2 block square of the torus "
                        "Anosov -> inconclusive with reducible char poly")
    twist = certify_pseudo_anosov(MappingClass(Surface(1), M([[1, 1], [0, 1]])))
    assert twist.verdict == Verdict.CERTIFIED_NOT_PA
    square = certify_pseudo_anosov(MappingClass(Surface(2), IntMatrix.block_diagonal(ANOSOV, ANOSOV)))
    assert square.verdict == Verdict.INCONCLUSIVE
    assert any(r.name == "irreducible" and not r.passed and "reducible char poly" in r.detail
               for r in square.reasons)
