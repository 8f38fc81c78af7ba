"""Independent oracles and random generators shared by the tests.

The oracles deliberately avoid the package's own elimination code: the
determinant is the Leibniz sum over permutations and the rank uses
Fraction-based Gauss-Jordan elimination.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations
from math import gcd

from surfbundle import CurveClass, IntMatrix, Surface, TwistLetter, from_twist_word


def perm_sign(p) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def leibniz_det(rows) -> int:
    n = len(rows)
    total = 0
    for p in permutations(range(n)):
        term = perm_sign(p)
        for i in range(n):
            term *= rows[i][p[i]]
            if not term:
                break
        total += term
    return total


def minors_gcd(rows, k: int) -> int:
    g = 0
    r, c = len(rows), len(rows[0])
    for ri in combinations(range(r), k):
        for ci in combinations(range(c), k):
            g = gcd(g, leibniz_det([[rows[i][j] for j in ci] for i in ri]))
    return g


def fraction_rank(rows) -> int:
    a = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    for c in range(len(a[0])):
        piv = next((i for i in range(rank, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][c] != 0:
                f = a[i][c] / a[rank][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def random_matrix(rng: random.Random, max_dim: int = 5, lo: int = -9, hi: int = 9) -> IntMatrix:
    r, c = rng.randint(1, max_dim), rng.randint(1, max_dim)
    return IntMatrix.from_rows([[rng.randint(lo, hi) for _ in range(c)] for _ in range(r)])


def generator_curves(surface: Surface) -> list[CurveClass]:
    """a_i, b_i and b_i - b_{i+1}: their transvections generate Sp(2g, Z)."""
    curves = surface.basis_curves()
    for i in range(1, surface.genus):
        v = tuple(x - y for x, y in zip(surface.b(i).homology, surface.b(i + 1).homology))
        curves.append(CurveClass(surface, v, label=f"b{i}-b{i + 1}"))
    return curves


def random_word(rng: random.Random, surface: Surface, min_len: int = 3, max_len: int = 10) -> list[TwistLetter]:
    gens = generator_curves(surface)
    return [TwistLetter(rng.choice(gens), rng.choice([-3, -2, -1, 1, 2, 3]))
            for _ in range(rng.randint(min_len, max_len))]


def random_mapping_class(rng: random.Random, surface: Surface, **kw):
    return from_twist_word(surface, random_word(rng, surface, **kw))


def random_primitive_vector(rng: random.Random, n: int, bound: int = 5) -> tuple[int, ...]:
    while True:
        v = [rng.randint(-bound, bound) for _ in range(n)]
        g = 0
        for x in v:
            g = gcd(g, x)
        if g == 1:
            return tuple(v)
