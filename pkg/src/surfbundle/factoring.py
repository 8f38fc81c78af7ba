"""Factor tests for integer polynomials: irreducibility over Q, cyclotomic
factors and power substitutions.

Irreducibility is decided without a computer algebra system:

1. a repeated factor shows up in gcd(f, f');
2. a linear factor shows up as an integer root;
3. distinct-degree factorisations modulo small primes restrict which
   degrees a rational factor could have (irreducible mod one prime ends the
   search at once);
4. any degree that survives is searched exhaustively with Kronecker's
   method, under an explicit work budget.

When the budget runs out the answer is ``None`` rather than a guess.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, prod
from typing import Optional

from .polynomial import IntPolynomial

SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151)

DEFAULT_SEARCH_BUDGET = 200_000


@dataclass(frozen=True)
class Irreducibility:
    irreducible: Optional[bool]
    method: str
    factor: Optional[IntPolynomial] = None


# --- arithmetic in F_p[t]; polynomials are coefficient lists, low degree first

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _reduce(coeffs, p: int) -> list[int]:
    return _trim([c % p for c in coeffs])


def _sub_p(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _mod_p(a: list[int], f: list[int], p: int) -> list[int]:
    a = list(a)
    df = len(f) - 1
    inv = pow(f[-1], -1, p)
    while len(a) - 1 >= df and a:
        q = a[-1] * inv % p
        shift = len(a) - 1 - df
        for j, c in enumerate(f):
            a[shift + j] = (a[shift + j] - q * c) % p
        _trim(a)
    return a


def _mulmod_p(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _mod_p(_trim(out), f, p)


def _powmod_p(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _mod_p(base, f, p)
    while e:
        if e & 1:
            result = _mulmod_p(result, base, f, p)
        base = _mulmod_p(base, base, f, p)
        e >>= 1
    return result


def _gcd_p(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _mod_p(a, b, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _divide_p(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        q = a[i] * inv % p
        quot[i - db] = q
        for j, c in enumerate(b):
            a[i - db + j] = (a[i - db + j] - q * c) % p
    return _trim(quot)


def _squarefree_mod_p(f: list[int], p: int) -> bool:
    df = _trim([(i * c) % p for i, c in enumerate(f)][1:])
    if not df:
        return False
    return len(_gcd_p(f, df, p)) == 1


def distinct_degree_pattern(f: IntPolynomial, p: int) -> Optional[list[int]]:
    """Degrees of the irreducible factors of ``f`` mod ``p``, sorted.

    Returns ``None`` when ``p`` divides the leading coefficient or ``f`` is
    not squarefree mod ``p``; such primes carry no usable information.
    """
    if f.leading_coefficient % p == 0:
        return None
    g = _reduce(f.coefficients, p)
    if not _squarefree_mod_p(g, p):
        return None
    degrees = []
    x = [0, 1]
    h = x
    d = 0
    while len(g) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod_p(h, p, g, p)
        common = _gcd_p(g, _sub_p(h, x, p), p)
        k = len(common) - 1
        if k > 0:
            degrees.extend([d] * (k // d))
            g = _divide_p(g, common, p)
            h = _mod_p(h, g, p)
    if len(g) > 1:
        degrees.append(len(g) - 1)
    return sorted(degrees)


# --- exact arithmetic over Q

def _qdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    db = len(b) - 1
    quot = [Fraction(0)] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        q = a[i] / b[-1]
        quot[i - db] = q
        for j, c in enumerate(b):
            a[i - db + j] -= q * c
    return _trim(quot), _trim(a[:db] if db else [])


def rational_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor over Q, returned as a primitive integer polynomial."""
    a = [Fraction(c) for c in f.coefficients]
    b = [Fraction(c) for c in g.coefficients]
    while b:
        a, b = b, _qdivmod(a, b)[1]
    if not a:
        return IntPolynomial()
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    return IntPolynomial(int(c * den) for c in a).primitive_part()


def _subset_sums(degrees: list[int]) -> set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def _divisors(n: int) -> Optional[list[int]]:
    n = abs(n)
    if n == 0 or n > 10**9:
        return None
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def integer_roots(f: IntPolynomial) -> list[int]:
    """Integer roots of a monic polynomial."""
    if f.coefficient(0) == 0:
        roots = [0]
        shifted = IntPolynomial(f.coefficients[next(i for i, c in enumerate(f.coefficients) if c):])
        return roots + [r for r in integer_roots(shifted) if r != 0]
    divs = _divisors(f.coefficient(0))
    if divs is None:
        raise ValueError("constant term too large for root enumeration")
    return [r for d in divs for r in (d, -d) if f(r) == 0]


def _kronecker_search(f: IntPolynomial, d: int, budget: int) -> tuple[Optional[IntPolynomial], bool]:
    """Search for a monic factor of degree ``d``.

    A monic degree-d factor ``g`` is pinned down by its values at ``d``
    integer points, and each value must divide the value of ``f`` there.
    Returns (factor, exhausted); ``exhausted`` is False when the candidate
    count exceeded ``budget``.
    """
    points = []
    for x in sorted(range(-40, 41), key=abs):
        v = f(x)
        if v == 0:
            return IntPolynomial([-x, 1]), True
        divs = _divisors(v)
        if divs is not None:
            points.append((len(divs), x, divs))
    if len(points) < d:
        return None, False
    points.sort()
    chosen = points[:d]
    count = prod(2 * n for n, _, _ in chosen)
    if count > budget:
        return None, False
    xs = [x for _, x, _ in chosen]
    # Lagrange basis for the degree < d remainder g(t) - t^d
    basis = []
    for i, xi in enumerate(xs):
        num = [Fraction(1)]
        den = 1
        for j, xj in enumerate(xs):
            if j != i:
                num = [Fraction(0)] + num
                for k in range(len(num) - 1):
                    num[k] -= xj * num[k + 1]
                den *= xi - xj
        basis.append([c / den for c in num])
    value_choices = [[s * q for q in divs for s in (1, -1)] for _, _, divs in chosen]
    for values in product(*value_choices):
        coeffs = [Fraction(0)] * d
        for b, v, x in zip(basis, values, xs):
            r = v - x ** d
            if r:
                for k, c in enumerate(b):
                    coeffs[k] += r * c
        if any(c.denominator != 1 for c in coeffs):
            continue
        g = IntPolynomial([int(c) for c in coeffs] + [1])
        if g.divides(f):
            return g, True
    return None, True


def irreducibility(f: IntPolynomial, budget: int = DEFAULT_SEARCH_BUDGET) -> Irreducibility:
    """Decide irreducibility of a monic integer polynomial over Q."""
    n = f.degree
    if n is None or n == 0:
        return Irreducibility(False, "constant")
    if not f.is_monic():
        raise ValueError("irreducibility test expects a monic polynomial")
    if n == 1:
        return Irreducibility(True, "linear")

    repeated = rational_gcd(f, f.derivative())
    if repeated.degree:
        return Irreducibility(False, "repeated factor", repeated)

    roots = integer_roots(f)
    if roots:
        return Irreducibility(False, "integer root", IntPolynomial([-roots[0], 1]))

    candidates = set(range(2, n // 2 + 1))
    for p in SMALL_PRIMES:
        pattern = distinct_degree_pattern(f, p)
        if pattern is None:
            continue
        if pattern == [n]:
            return Irreducibility(True, f"irreducible mod {p}")
        candidates &= _subset_sums(pattern)
        if not candidates:
            return Irreducibility(True, "factor degrees excluded modulo small primes")

    exhausted = True
    for d in sorted(candidates):
        factor, done = _kronecker_search(f, d, budget)
        if factor is not None:
            return Irreducibility(False, f"degree {d} factor found", factor)
        exhausted = exhausted and done
    if exhausted:
        return Irreducibility(True, "exhaustive factor search")
    return Irreducibility(None, "factor search budget exceeded")


def totient(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPolynomial:
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    num = IntPolynomial([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            num, rem = num.divmod_exact(cyclotomic_polynomial(d))
            assert rem.is_zero()
    return num


def cyclotomic_factor(f: IntPolynomial) -> Optional[int]:
    """Smallest ``n`` such that the n-th cyclotomic polynomial divides ``f``."""
    deg = f.degree
    if not deg:
        return None
    for n in range(1, 2 * deg * deg + 1):
        if totient(n) <= deg and cyclotomic_polynomial(n).divides(f):
            return n
    return None


def power_substitution(f: IntPolynomial) -> Optional[int]:
    """Largest ``k > 1`` with ``f(t) = q(t^k)``, or None."""
    deg = f.degree
    if not deg:
        return None
    exps = [i for i, c in enumerate(f.coefficients) if c]
    for k in range(deg, 1, -1):
        if deg % k == 0 and all(e % k == 0 for e in exps):
            return k
    return None
