"""Monodromies: Dehn twist words and their action on first homology.

Twist convention: the right-handed twist along c with power m acts on
homology by the transvection x -> x + m <x, c> c. Matrices act on column
vectors, so the twist along a1 on the torus is [[1, -1], [0, 1]].
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from .errors import DimensionError, DomainError
from .factoring import cyclotomic_factor, irreducibility, power_substitution
from .linalg import IntMatrix, characteristic_polynomial, symplectic_inverse
from .surface import CurveClass, Surface, standard_symplectic_form


@dataclass(frozen=True)
class TwistLetter:
    curve: CurveClass
    power: int = 1

    def __post_init__(self):
        if isinstance(self.power, bool) or not isinstance(self.power, int):
            raise TypeError(f"twist power must be an integer, got {self.power!r}")
        if self.power == 0:
            raise DomainError("twist power must be nonzero")

    def inverse(self) -> "TwistLetter":
        return TwistLetter(self.curve, -self.power)

    def __str__(self) -> str:
        name = self.curve.label or str(list(self.curve.homology))
        return name if self.power == 1 else f"{name}^{self.power}"


def transvection_matrix(c: CurveClass, power: int = 1) -> IntMatrix:
    n = c.surface.rank
    if c.separating or power == 0:
        return IntMatrix.identity(n)
    v = c.homology
    jc = standard_symplectic_form(c.surface.genus).apply(v)
    # T = I + power * c (Jc)^T, since <x, c> = (Jc) . x
    return IntMatrix(n, n, (int(i == j) + power * v[i] * jc[j] for i in range(n) for j in range(n)))


def word_matrix(surface: Surface, word: Sequence[TwistLetter]) -> IntMatrix:
    m = IntMatrix.identity(surface.rank)
    for i, letter in enumerate(word):
        if letter.curve.surface != surface:
            raise DomainError(f"word letter {i} lives on genus {letter.curve.surface.genus}, "
                              f"expected genus {surface.genus}")
        m = m @ transvection_matrix(letter.curve, letter.power)
    return m


@dataclass(frozen=True)
class MappingClass:
    """Homology action of a monodromy, optionally with a twist word.

    The word is written in composition order: the last letter acts first.
    The matrix is not required to be symplectic here, so malformed inputs
    can be represented and rejected by the operations that need symplecticity.
    """

    surface: Surface
    matrix: IntMatrix
    word: Optional[tuple[TwistLetter, ...]] = field(default=None)

    def __post_init__(self):
        n = self.surface.rank
        if self.matrix.shape != (n, n):
            raise DimensionError(f"monodromy matrix must be {n}x{n} for genus {self.surface.genus}, "
                                 f"got {self.matrix.rows}x{self.matrix.cols}")
        if self.word is not None:
            object.__setattr__(self, "word", tuple(self.word))
            expected = word_matrix(self.surface, self.word)
            if expected != self.matrix:
                raise DomainError("matrix does not match the product of the twist word")

    @classmethod
    def identity(cls, surface: Surface) -> "MappingClass":
        return cls(surface, IntMatrix.identity(surface.rank), ())

    @property
    def genus(self) -> int:
        return self.surface.genus

    def inverse(self) -> "MappingClass":
        require_symplectic(self)
        word = None
        if self.word is not None:
            word = tuple(letter.inverse() for letter in reversed(self.word))
        return MappingClass(self.surface, symplectic_inverse(self.matrix, standard_symplectic_form(self.genus)), word)

    def word_string(self) -> Optional[str]:
        if self.word is None:
            return None
        return " ".join(str(letter) for letter in self.word) or "1"


def from_twist_word(surface: Surface, word: Sequence[TwistLetter]) -> MappingClass:
    word = tuple(word)
    return MappingClass(surface, word_matrix(surface, word), word)


def compose(f: MappingClass, g: MappingClass) -> MappingClass:
    """f after g."""
    if f.surface != g.surface:
        raise DomainError(f"cannot compose monodromies on genus {f.genus} and genus {g.genus}")
    word = f.word + g.word if f.word is not None and g.word is not None else None
    return MappingClass(f.surface, f.matrix @ g.matrix, word)


def is_symplectic_matrix(m: IntMatrix, genus: int) -> bool:
    j = standard_symplectic_form(genus)
    return m.shape == j.shape and m.T @ j @ m == j


def is_symplectic(f: MappingClass) -> bool:
    return is_symplectic_matrix(f.matrix, f.genus)


def require_symplectic(f: MappingClass) -> None:
    if not is_symplectic(f):
        raise DomainError("monodromy matrix is not symplectic (M^T J M != J)")


def minus_identity_word(surface: Surface, first_handle: int = 1, handles: Optional[int] = None) -> tuple[TwistLetter, ...]:
    """Twist word acting as -I on the handles first_handle..first_handle+handles-1
    and trivially elsewhere.

    Uses a chain c_1, ..., c_2h of curves on those handles (classes b_1, a_1,
    b_1 - b_2, a_2, ..., a_h after relabelling); (T_1 ... T_2h)^(2h+1) is the
    hyperelliptic involution of the chain neighbourhood up to a boundary
    twist, which is invisible on homology.
    """
    if handles is None:
        handles = surface.genus - first_handle + 1
    if handles < 1 or first_handle < 1 or first_handle + handles - 1 > surface.genus:
        raise DomainError("handle range does not fit the surface")
    chain = []
    for i in range(first_handle, first_handle + handles):
        if i == first_handle:
            chain.append(surface.b(i))
        else:
            v = tuple(x - y for x, y in zip(surface.b(i - 1).homology, surface.b(i).homology))
            chain.append(CurveClass(surface, v, label=f"b{i - 1}-b{i}"))
        chain.append(surface.a(i))
    return tuple(TwistLetter(c, 1) for c in chain) * (2 * handles + 1)


class Verdict(str, Enum):
    CERTIFIED_PA = "certified-pA"
    CERTIFIED_NOT_PA = "certified-not-pA"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


HOMOLOGY_ONLY_NOTE = ("genus >= 2: the test reads only the action on homology, so it can certify "
                      "pseudo-Anosov but never refute it")


@dataclass(frozen=True)
class PACertificate:
    verdict: Verdict
    reasons: tuple[Check, ...]
    characteristic_polynomial: str
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "verdict": self.verdict.value,
            "characteristic_polynomial": self.characteristic_polynomial,
            "reasons": [r.to_json() for r in self.reasons],
        }
        if self.note:
            out["note"] = self.note
        return out


def certify_pseudo_anosov(f: MappingClass) -> PACertificate:
    """One-sided pseudo-Anosov test from the homology action.

    On the torus the answer is exact: Anosov iff |trace| > 2. In higher
    genus the map is certified when its characteristic polynomial is
    irreducible, has no cyclotomic factor and is not a polynomial in t^k
    for k > 1; otherwise the result is inconclusive.
    """
    poly = characteristic_polynomial(f.matrix)
    poly_text = str(poly)
    if not is_symplectic(f):
        check = Check("symplectic", False, "matrix does not preserve the intersection form")
        return PACertificate(Verdict.INCONCLUSIVE, (check,), poly_text)

    if f.genus == 1:
        tr = f.matrix.trace()
        ok = abs(tr) > 2
        check = Check("torus-trace", ok, f"|trace| = {abs(tr)} {'>' if ok else '<='} 2")
        verdict = Verdict.CERTIFIED_PA if ok else Verdict.CERTIFIED_NOT_PA
        return PACertificate(verdict, (check,), poly_text)

    irr = irreducibility(poly)
    if irr.irreducible is True:
        irr_check = Check("irreducible", True, f"irreducible char poly ({irr.method})")
    elif irr.irreducible is False:
        detail = "reducible char poly"
        if irr.factor is not None:
            detail += f": factor {irr.factor}"
        irr_check = Check("irreducible", False, f"{detail} ({irr.method})")
    else:
        irr_check = Check("irreducible", False, f"irreducibility undetermined ({irr.method})")

    n = cyclotomic_factor(poly)
    cyc_check = Check("cyclotomic-free", n is None,
                      "no cyclotomic factor" if n is None else f"divisible by cyclotomic polynomial Phi_{n}")
    k = power_substitution(poly)
    pow_check = Check("not-power-substitution", k is None,
                      "not a polynomial in t^k for k > 1" if k is None else f"char poly is a polynomial in t^{k}")
    reasons = (irr_check, cyc_check, pow_check)
    verdict = Verdict.CERTIFIED_PA if all(r.passed for r in reasons) else Verdict.INCONCLUSIVE
    return PACertificate(verdict, reasons, poly_text, HOMOLOGY_ONLY_NOTE)
