"""Homology-level extensions f_s of a monodromy f_t across a pinch.

H1(F_s) splits as the handles kept by the pinch (V-summand, the first
2*g_t coordinates) plus the added handles (W-summand). The extension acts
block-diagonally as diag(f_t#, A). Choosing A with I - A nondegenerate keeps
the first Betti number of the mapping torus unchanged.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import DomainError
from .homology import betti_one
from .linalg import IntMatrix, determinant
from .mapping_class import (
    MappingClass,
    PACertificate,
    TwistLetter,
    Verdict,
    certify_pseudo_anosov,
    from_twist_word,
    is_symplectic,
    minus_identity_word,
    require_symplectic,
)
from .surface import BasisSplit, CurveClass, Surface

EQUAL_BETTI = "equal-betti"
DELTA_ONE = "equal-betti-delta-one"
GENERAL = "equal-betti-general"
NAIVE = "naive"
VARIANTS = (DELTA_ONE, GENERAL, NAIVE)


@dataclass(frozen=True)
class PinchMap:
    split: BasisSplit
    matrix: IntMatrix

    def inclusion(self) -> IntMatrix:
        """Section of the pinch: the V-summand inclusion, 2*g_s x 2*g_t."""
        return self.matrix.T


def pinch_homology_map(g_s: int, g_t: int) -> PinchMap:
    split = BasisSplit(g_s, g_t)
    n, m = 2 * g_t, 2 * g_s
    return PinchMap(split, IntMatrix(n, m, (int(i == j) for i in range(n) for j in range(m))))


def delta_one_block(k: int = 0) -> IntMatrix:
    """[[2+k, 1+k], [1, 1]]: the twist power tau^k composed with [[2, 1], [1, 1]]."""
    if k < 0:
        raise DomainError(f"k must be >= 0 for I - A to be nondegenerate, got {k}")
    return IntMatrix.from_rows([[2 + k, 1 + k], [1, 1]])


def _delta_one_word(w: Surface, k: int) -> tuple[TwistLetter, ...]:
    # T_alpha^-(k+1) T_beta = [[2+k, 1+k], [1, 1]] under x -> x + <x,c>c
    return (TwistLetter(w.a(1), -(k + 1)), TwistLetter(w.b(1), 1))


def _alpha_twists(w: Surface, multiplicities: Sequence[int]) -> tuple[TwistLetter, ...]:
    return tuple(TwistLetter(w.a(l), m) for l, m in enumerate(multiplicities, start=1))


def _check_multiplicities(delta: int, multiplicities: Sequence[int]) -> list[int]:
    if delta < 2:
        raise DomainError(f"general block needs delta >= 2, got {delta}; use delta_one_block")
    mults = list(multiplicities)
    if len(mults) != delta:
        raise DomainError(f"expected {delta} twist multiplicities, got {len(mults)}")
    if any(m == 0 for m in mults):
        raise DomainError("twist multiplicities must be nonzero")
    return mults


def delta_general_block(delta: int, multiplicities: Sequence[int]) -> IntMatrix:
    """A = U @ (-I), U the unipotent action of prod tau_{alpha_l}^{m_l}.

    I - A = I + U is upper triangular with 2 on the diagonal, so
    det(I - A) = 2^(2*delta).
    """
    mults = _check_multiplicities(delta, multiplicities)
    w = Surface(delta)
    u = from_twist_word(w, _alpha_twists(w, mults)).matrix
    return -u


@dataclass(frozen=True)
class ExtensionResult:
    f_t: MappingClass
    f_s: MappingClass
    pinch: PinchMap
    a_block: IntMatrix
    variant: str
    parameters: dict = field(default_factory=dict)

    @property
    def g_t(self) -> int:
        return self.f_t.genus

    @property
    def g_s(self) -> int:
        return self.f_s.genus

    @property
    def delta(self) -> int:
        return self.g_s - self.g_t


def build_extension(
    f_t: MappingClass,
    g_s: int,
    variant: str = EQUAL_BETTI,
    k: Optional[int] = None,
    multiplicities: Optional[Sequence[int]] = None,
) -> ExtensionResult:
    """Extend ``f_t`` to genus ``g_s`` as diag(f_t#, A).

    ``variant`` is ``equal-betti`` (resolved by delta to the delta-one or
    general block), one of the explicit equal-betti variants, or ``naive``
    (A = I, which raises the Betti number by 2*delta). Defaults are k = 0
    and all multiplicities 1.
    """
    require_symplectic(f_t)
    split = BasisSplit(g_s, f_t.genus)
    delta = split.delta
    if variant == EQUAL_BETTI:
        variant = DELTA_ONE if delta == 1 else GENERAL
    if variant not in VARIANTS:
        raise DomainError(f"unknown variant {variant!r}; expected one of {', '.join((EQUAL_BETTI,) + VARIANTS)}")

    w = Surface(delta)
    params: dict = {"delta": delta}
    if variant == DELTA_ONE:
        if delta != 1:
            raise DomainError(f"the delta-one block needs g_s = g_t + 1, got delta = {delta}")
        k = 0 if k is None else k
        a_block = delta_one_block(k)
        w_word = _delta_one_word(w, k)
        params.update(k=k, block="[[2+k, 1+k], [1, 1]]")
    elif variant == GENERAL:
        mults = [1] * delta if multiplicities is None else list(multiplicities)
        a_block = delta_general_block(delta, mults)
        w_word = _alpha_twists(w, mults) + minus_identity_word(w)
        params.update(multiplicities=mults, block="prod tau_alpha^m @ (-I)")
    else:
        a_block = IntMatrix.identity(2 * delta)
        w_word = ()
        params.update(block="identity")

    big = split.big
    matrix = IntMatrix.block_diagonal(f_t.matrix, a_block)
    word = None
    if f_t.word is not None:
        word = tuple(TwistLetter(_shifted(l.curve, big, f_t.genus), l.power) for l in w_word)
        word += tuple(TwistLetter(l.curve.embed(big, 0), l.power) for l in f_t.word)
    f_s = MappingClass(big, matrix, word)
    return ExtensionResult(f_t, f_s, pinch_homology_map(g_s, f_t.genus), a_block, variant, params)


def _shifted(curve: CurveClass, big: Surface, handles: int) -> CurveClass:
    """Move a curve on the added handles into F_s, renaming a1 -> a{handles+1} etc."""
    label = curve.label
    if label:
        label = re.sub(r"([ab])(\d+)", lambda m: f"{m.group(1)}{int(m.group(2)) + handles}", label)
    moved = curve.embed(big, 2 * handles)
    return CurveClass(big, moved.homology, moved.separating, label)


@dataclass(frozen=True)
class ExtensionCertificate:
    block_form_ok: bool
    symplectic_ok: bool
    square_commutes_ok: bool
    i_minus_a_nondegenerate: bool
    betti_equal: bool
    pa_certificate: PACertificate
    betti_t: Optional[int] = None
    betti_s: Optional[int] = None

    @property
    def structural_ok(self) -> bool:
        return self.block_form_ok and self.symplectic_ok and self.square_commutes_ok

    @property
    def all_pass(self) -> bool:
        """Every homological conclusion holds and the pA test does not refute."""
        return (self.structural_ok and self.i_minus_a_nondegenerate and self.betti_equal
                and self.pa_certificate.verdict != Verdict.CERTIFIED_NOT_PA)

    def to_json(self) -> dict:
        return {
            "block_form_ok": self.block_form_ok,
            "symplectic_ok": self.symplectic_ok,
            "square_commutes_ok": self.square_commutes_ok,
            "i_minus_a_nondegenerate": self.i_minus_a_nondegenerate,
            "betti_equal": self.betti_equal,
            "betti_one_target": self.betti_t,
            "betti_one_extension": self.betti_s,
            "pa_verdict": self.pa_certificate.verdict.value,
            "pa_certificate": self.pa_certificate.to_json(),
            "all_pass": self.all_pass,
        }


def _block_form_ok(result: ExtensionResult) -> bool:
    n_t = 2 * result.g_t
    n_s = 2 * result.g_s
    m = result.f_s.matrix
    a = result.a_block
    if m.shape != (n_s, n_s) or a.shape != (n_s - n_t, n_s - n_t):
        return False
    for i in range(n_s):
        for j in range(n_s):
            if i < n_t and j < n_t:
                want = result.f_t.matrix[i, j]
            elif i >= n_t and j >= n_t:
                want = a[i - n_t, j - n_t]
            else:
                want = 0
            if m[i, j] != want:
                return False
    return True


def _safe_betti(f: MappingClass) -> Optional[int]:
    try:
        return betti_one(f)
    except DomainError:
        return None


def verify_extension(result: ExtensionResult) -> ExtensionCertificate:
    """Recheck every conclusion from the matrices alone.

    Nothing recorded at construction time is trusted; the pinch is rebuilt
    from the two genera and used on both sides of the commuting square.
    """
    try:
        pinch = pinch_homology_map(result.g_s, result.g_t).matrix
        square = pinch @ result.f_s.matrix == result.f_t.matrix @ pinch
    except (DomainError, ValueError):
        square = False
    a = result.a_block
    nondegenerate = a.is_square and determinant(IntMatrix.identity(a.rows) - a) != 0
    b_t = _safe_betti(result.f_t)
    b_s = _safe_betti(result.f_s)
    return ExtensionCertificate(
        block_form_ok=_block_form_ok(result),
        symplectic_ok=is_symplectic(result.f_s),
        square_commutes_ok=square,
        i_minus_a_nondegenerate=nondegenerate,
        betti_equal=b_t is not None and b_t == b_s,
        pa_certificate=certify_pseudo_anosov(result.f_s),
        betti_t=b_t,
        betti_s=b_s,
    )
