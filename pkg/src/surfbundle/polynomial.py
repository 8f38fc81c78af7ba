from __future__ import annotations

from math import gcd
from typing import Iterable, Optional


class IntPolynomial:
    """Integer polynomial; ``coefficients[i]`` multiplies ``t**i``.

    The zero polynomial has no coefficients and no degree (``degree`` is
    ``None``).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[int] = ()):
        c = [int(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coefficient])

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> Optional[int]:
        return len(self._coeffs) - 1 if self._coeffs else None

    @property
    def leading_coefficient(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    def coefficient(self, i: int) -> int:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else 0

    def content(self) -> int:
        g = 0
        for x in self._coeffs:
            g = gcd(g, x)
        return g

    def primitive_part(self) -> "IntPolynomial":
        g = self.content()
        if g == 0:
            return self
        if self.leading_coefficient < 0:
            g = -g
        return IntPolynomial(x // g for x in self._coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self._coeffs) if i)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self._coeffs), len(other._coeffs))
        return IntPolynomial(self.coefficient(i) + other.coefficient(i) for i in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self._coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self._coeffs or not other._coeffs:
            return IntPolynomial()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __pow__(self, n: int) -> "IntPolynomial":
        result = IntPolynomial([1])
        for _ in range(n):
            result = result * self
        return result

    def divmod_exact(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division over Z.

        Raises ArithmeticError if some quotient coefficient is not an
        integer (never happens for a monic divisor).
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dd = divisor.degree
        lc = divisor.leading_coefficient
        quot = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            if c % lc:
                raise ArithmeticError("division is not exact over the integers")
            q = c // lc
            quot[i - dd] = q
            for j, d in enumerate(divisor._coeffs):
                rem[i - dd + j] -= q * d
        return IntPolynomial(quot), IntPolynomial(rem)

    def divides(self, other: "IntPolynomial") -> bool:
        """True iff ``self`` divides ``other`` in Z[t]."""
        try:
            _, r = other.divmod_exact(self)
        except ArithmeticError:
            return False
        return r.is_zero()

    def is_reciprocal(self) -> bool:
        return self._coeffs == self._coeffs[::-1]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == IntPolynomial([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "t" if i == 1 else f"t^{i}"
                body = mono if a == 1 else f"{a}{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out
