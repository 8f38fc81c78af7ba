"""Symplectic model of a closed oriented surface.

Homology coordinates use the interleaved basis (a1, b1, a2, b2, ..., ag, bg)
with <a_i, b_i> = +1. With this ordering the handles kept by a pinch are a
leading block of coordinates and the pinched handles are the trailing block.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Optional, Sequence

from .errors import DomainError
from .linalg import IntMatrix


@dataclass(frozen=True)
class Surface:
    genus: int

    def __post_init__(self):
        if isinstance(self.genus, bool) or not isinstance(self.genus, int) or self.genus < 1:
            raise DomainError(f"surface genus must be an integer >= 1, got {self.genus!r}")

    @property
    def rank(self) -> int:
        return 2 * self.genus

    def basis_vector(self, index: int) -> tuple[int, ...]:
        v = [0] * self.rank
        v[index] = 1
        return tuple(v)

    def a(self, i: int) -> "CurveClass":
        """The curve a_i (1-based)."""
        self._check_handle(i)
        return CurveClass(self, self.basis_vector(2 * (i - 1)), label=f"a{i}")

    def b(self, i: int) -> "CurveClass":
        self._check_handle(i)
        return CurveClass(self, self.basis_vector(2 * i - 1), label=f"b{i}")

    def named_curve(self, name: str) -> "CurveClass":
        """Resolve a generator name such as ``a1`` or ``b3``."""
        if len(name) < 2 or name[0] not in "ab" or not name[1:].isdigit():
            raise DomainError(f"unknown generator name {name!r}; expected a1..a{self.genus} or b1..b{self.genus}")
        i = int(name[1:])
        return self.a(i) if name[0] == "a" else self.b(i)

    def basis_curves(self) -> list["CurveClass"]:
        out = []
        for i in range(1, self.genus + 1):
            out += [self.a(i), self.b(i)]
        return out

    def _check_handle(self, i: int) -> None:
        if not 1 <= i <= self.genus:
            raise DomainError(f"handle index {i} out of range for genus {self.genus}")


@dataclass(frozen=True)
class CurveClass:
    """A curve recorded by its homology class and whether it separates.

    Separating curves are null-homologous, so they carry the zero vector.
    Nonseparating simple closed curves have primitive classes.
    """

    surface: Surface
    homology: tuple[int, ...]
    separating: bool = False
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "homology", tuple(int(x) for x in self.homology))
        if len(self.homology) != self.surface.rank:
            raise DomainError(f"homology vector has length {len(self.homology)}, "
                              f"expected {self.surface.rank} for genus {self.surface.genus}")
        if self.separating:
            if any(self.homology):
                raise DomainError("a separating curve must have zero homology class")
        else:
            g = 0
            for x in self.homology:
                g = gcd(g, x)
            if g != 1:
                raise DomainError(f"nonseparating curve class must be primitive, got {list(self.homology)}")

    @classmethod
    def separating_curve(cls, surface: Surface, label: Optional[str] = None) -> "CurveClass":
        return cls(surface, (0,) * surface.rank, separating=True, label=label)

    def embed(self, surface: Surface, offset: int = 0) -> "CurveClass":
        """The same curve viewed on a larger surface, shifted by ``offset`` coordinates."""
        v = [0] * surface.rank
        v[offset:offset + len(self.homology)] = self.homology
        return CurveClass(surface, tuple(v), self.separating, self.label)

    def to_json(self) -> dict:
        return {"label": self.label, "homology": list(self.homology), "separating": self.separating}


@lru_cache(maxsize=None)
def standard_symplectic_form(g: int) -> IntMatrix:
    """Intersection form J: g diagonal copies of [[0, 1], [-1, 0]]."""
    if g < 1:
        raise DomainError(f"genus must be >= 1, got {g}")
    block = IntMatrix.from_rows([[0, 1], [-1, 0]])
    return IntMatrix.block_diagonal(*([block] * g))


def pairing(x: Sequence[int], y: Sequence[int]) -> int:
    """<x, y> = x^T J y on raw interleaved coordinate vectors."""
    if len(x) != len(y) or len(x) % 2:
        raise DomainError("pairing needs two vectors of the same even length")
    return sum(x[i] * y[i + 1] - x[i + 1] * y[i] for i in range(0, len(x), 2))


def intersection_number(x: CurveClass, y: CurveClass) -> int:
    if x.surface != y.surface:
        raise DomainError(f"curves live on different surfaces (genus {x.surface.genus} vs {y.surface.genus})")
    return pairing(x.homology, y.homology)


def pairing_matrix(curves: Sequence[CurveClass]) -> IntMatrix:
    return IntMatrix.from_rows([[intersection_number(x, y) for y in curves] for x in curves])


@dataclass(frozen=True)
class BasisSplit:
    """H1(F_s) = V-summand (first 2*g_t coordinates) + W-summand (last 2*delta)."""

    g_s: int
    g_t: int

    def __post_init__(self):
        if self.g_t < 1 or self.g_s <= self.g_t:
            raise DomainError(f"need g_s > g_t >= 1, got g_s={self.g_s}, g_t={self.g_t}")

    @property
    def delta(self) -> int:
        return self.g_s - self.g_t

    @property
    def v_indices(self) -> range:
        return range(0, 2 * self.g_t)

    @property
    def w_indices(self) -> range:
        return range(2 * self.g_t, 2 * self.g_s)

    @property
    def big(self) -> Surface:
        return Surface(self.g_s)

    @property
    def small(self) -> Surface:
        return Surface(self.g_t)


def handle_curve_family(split: BasisSplit) -> list[CurveClass]:
    """Curves alpha_l, beta_l, gamma_l on the added handles.

    alpha_l and beta_l are the basis classes a_{g_t+l}, b_{g_t+l}; gamma_l
    bounds a neighbourhood of alpha_l and beta_l, so it separates and is
    null-homologous. Returned in the order alpha_1..alpha_d, beta_1..beta_d,
    gamma_1..gamma_d.
    """
    big = split.big
    alphas, betas, gammas = [], [], []
    for l in range(1, split.delta + 1):
        h = split.g_t + l
        alphas.append(CurveClass(big, big.a(h).homology, label=f"alpha{l}"))
        betas.append(CurveClass(big, big.b(h).homology, label=f"beta{l}"))
        gammas.append(CurveClass.separating_curve(big, label=f"gamma{l}"))
    return alphas + betas + gammas
